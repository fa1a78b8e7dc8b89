#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "absent/skeleton.hpp"
#include "absent/skeleton_words.hpp"
#include "absent/word_index.hpp"

namespace absent {

/// Row i lists P_i in increasing order: for every letter of w[1:i], the
/// position of its last occurrence up to i. Unused cells hold kInfinity.
class PSetMatrix {
public:
    static constexpr Pos kInfinity = std::numeric_limits<Pos>::max();

    Pos n() const noexcept { return n_; }
    Letter sigma() const noexcept { return sigma_; }
    Pos row_size(Pos i) const { return sizes_[static_cast<std::size_t>(i)]; }

    /// j_{i,l} for 1 <= l <= sigma; kInfinity past row_size(i).
    Pos at(Pos i, Pos l) const { return km_[cell(i, l)]; }

    std::span<const Pos> row(Pos i) const {
        return {km_.data() + cell(i, 1), static_cast<std::size_t>(row_size(i))};
    }

    friend PSetMatrix compute_p_sets(const WordIndex& idx);

private:
    std::size_t cell(Pos i, Pos l) const { return static_cast<std::size_t>(i) * sigma_ + static_cast<std::size_t>(l - 1); }

    Pos n_ = 0;
    Letter sigma_ = 0;
    std::vector<Pos> km_;
    std::vector<Pos> sizes_;
};

/// Upper bound on n*sigma cells for the quadratic-space tables of this module.
inline constexpr std::size_t kMasSkeletonCellLimit = std::size_t{1} << 27;

namespace detail {

inline void check_mas_skeleton_size(const WordIndex& idx) {
    const auto cells = (static_cast<std::size_t>(idx.n()) + 2) * idx.sigma();
    if (cells > kMasSkeletonCellLimit)
        throw Error(ErrorCode::TooLarge, "n*sigma = " + std::to_string(cells) + " exceeds the MAS skeleton limit");
}

}  // namespace detail

inline PSetMatrix compute_p_sets(const WordIndex& idx) {
    detail::check_mas_skeleton_size(idx);
    PSetMatrix p;
    const Pos n = idx.n();
    const Letter sigma = idx.sigma();
    p.n_ = n;
    p.sigma_ = sigma;
    p.km_.assign((static_cast<std::size_t>(n) + 1) * sigma, PSetMatrix::kInfinity);
    p.sizes_.assign(static_cast<std::size_t>(n) + 1, 0);

    // Letters ordered by their latest occurrence, oldest first.
    constexpr Letter kNil = 0;
    std::vector<Letter> before(sigma + 1, kNil), after(sigma + 1, kNil);
    std::vector<Pos> latest(sigma + 1, 0);
    Letter head = kNil, tail = kNil;
    Pos size = 0;
    for (Pos i = 1; i <= n; ++i) {
        const Letter a = idx[i];
        if (latest[a] != 0) {
            if (before[a] != kNil) after[before[a]] = after[a]; else head = after[a];
            if (after[a] != kNil) before[after[a]] = before[a]; else tail = before[a];
        } else {
            ++size;
        }
        before[a] = tail;
        after[a] = kNil;
        if (tail != kNil) after[tail] = a; else head = a;
        tail = a;
        latest[a] = i;

        p.sizes_[static_cast<std::size_t>(i)] = size;
        Pos l = 1;
        for (Letter b = head; b != kNil; b = after[b]) p.km_[p.cell(i, l++)] = latest[b];
    }
    return p;
}

/// The (n+1)-skeleton whose paths s, v_{i_1}, ..., v_{i_m}, f map to the MAS
/// w[i_1]...w[i_m]b, b being the letter at the j-component of the last node.
/// Only nodes reachable from s are kept, and empty levels are squeezed out.
class MasSkeleton {
public:
    const SkeletonDag& dag() const noexcept { return dag_; }

    /// The pair (i, j_{i,l}) of a node; (0, 0) for s and (n+1, 0) for f.
    std::pair<Pos, Pos> label(Node v) const {
        return {node_i_[static_cast<std::size_t>(v)], node_j_[static_cast<std::size_t>(v)]};
    }

    void append_letter(Node prev, Node v, std::vector<Letter>& out) const {
        if (v == dag_.sink()) out.push_back((*word_)[node_j_[static_cast<std::size_t>(prev)]]);
        else out.push_back((*word_)[node_i_[static_cast<std::size_t>(v)]]);
    }

    friend MasSkeleton build_mas_skeleton(const WordIndex& idx);

private:
    SkeletonDag dag_;
    std::vector<Pos> node_i_, node_j_;
    const Word* word_ = nullptr;
};

inline MasSkeleton build_mas_skeleton(const WordIndex& idx) {
    const Pos n = idx.n();
    const Letter sigma = idx.sigma();
    const PSetMatrix P = compute_p_sets(idx);

    // nextpos[a, i] for i in [1:n+1].
    std::vector<Pos> nextpos((static_cast<std::size_t>(n) + 2) * sigma, n + 1);
    for (Pos i = n; i >= 1; --i) {
        const auto row = static_cast<std::size_t>(i) * sigma;
        std::copy_n(nextpos.begin() + static_cast<std::ptrdiff_t>(row + sigma), sigma, nextpos.begin() + static_cast<std::ptrdiff_t>(row));
        nextpos[row + idx[i] - 1] = i;
    }
    auto np = [&](Letter a, Pos i) { return nextpos[static_cast<std::size_t>(i) * sigma + a - 1]; };

    // Full node set v_i^l, addressed as base[i] + l - 1.
    std::vector<std::size_t> base(static_cast<std::size_t>(n) + 2, 0);
    for (Pos i = 1; i <= n; ++i) base[static_cast<std::size_t>(i) + 1] = base[static_cast<std::size_t>(i)] + static_cast<std::size_t>(P.row_size(i));
    const std::size_t total = base[static_cast<std::size_t>(n) + 1];
    constexpr Pos kToSink = 0;
    std::vector<Pos> down_level(total, kToSink), down_slot(total, 0);

    std::vector<Pos> S(static_cast<std::size_t>(n) + 2, 1);
    for (Pos i = 1; i <= n; ++i) {
        for (Pos l = 1; l <= P.row_size(i); ++l) {
            const auto v = base[static_cast<std::size_t>(i)] + static_cast<std::size_t>(l - 1);
            const Pos k = np(idx[P.at(i, l)], i + 1);
            if (k > n) continue;
            Pos& s = S[static_cast<std::size_t>(k)];
            while (P.at(k, s) <= i) ++s;
            down_level[v] = k;
            down_slot[v] = s;
        }
    }

    // Forward reachability: on each level the reachable nodes form a suffix of
    // the sibling chain, starting at the smallest entry slot.
    constexpr Pos kUnreached = std::numeric_limits<Pos>::max();
    std::vector<Pos> entry(static_cast<std::size_t>(n) + 2, kUnreached);
    for (Letter a = 1; a <= sigma; ++a) entry[static_cast<std::size_t>(idx.first_occurrence(a))] = 1;
    for (Pos i = 1; i <= n; ++i) {
        const Pos e = entry[static_cast<std::size_t>(i)];
        if (e == kUnreached) continue;
        for (Pos l = e; l <= P.row_size(i); ++l) {
            const auto v = base[static_cast<std::size_t>(i)] + static_cast<std::size_t>(l - 1);
            const Pos k = down_level[v];
            if (k != kToSink) entry[static_cast<std::size_t>(k)] = std::min(entry[static_cast<std::size_t>(k)], down_slot[v]);
        }
    }

    MasSkeleton sk;
    sk.word_ = &idx.word();
    std::vector<Node> order;
    std::vector<std::size_t> level_begin;
    std::vector<Node> id(total, kNone);
    auto add = [&](Pos i, Pos j) {
        const auto v = static_cast<Node>(sk.node_i_.size());
        sk.node_i_.push_back(i);
        sk.node_j_.push_back(j);
        order.push_back(v);
        return v;
    };
    level_begin.push_back(0);
    add(0, 0);
    for (Pos i = 1; i <= n; ++i) {
        const Pos e = entry[static_cast<std::size_t>(i)];
        if (e == kUnreached) continue;
        level_begin.push_back(order.size());
        for (Pos l = e; l <= P.row_size(i); ++l)
            id[base[static_cast<std::size_t>(i)] + static_cast<std::size_t>(l - 1)] = add(i, P.at(i, l));
    }
    level_begin.push_back(order.size());
    const Node f = add(n + 1, 0);
    level_begin.push_back(order.size());

    std::vector<Node> down(order.size(), kNone);
    for (std::size_t v = 0; v < total; ++v) {
        if (id[v] == kNone) continue;
        const Pos k = down_level[v];
        down[static_cast<std::size_t>(id[v])] =
            k == kToSink ? f : id[base[static_cast<std::size_t>(k)] + static_cast<std::size_t>(down_slot[v] - 1)];
    }
    std::vector<Node> targets;
    for (Letter a = 1; a <= sigma; ++a) targets.push_back(id[base[static_cast<std::size_t>(idx.first_occurrence(a))]]);
    sk.dag_ = SkeletonDag::from_levels(std::move(order), std::move(level_begin), std::move(down), std::move(targets));
    return sk;
}

using MasSkeletonEnumerator = SkeletonWordEnumerator<MasSkeleton>;

inline std::vector<std::vector<Letter>> enumerate_mas_via_skeleton(const WordIndex& idx) {
    auto sk = build_mas_skeleton(idx);
    std::vector<std::vector<Letter>> out;
    for_each_word(sk, [&](std::vector<Letter> v) { out.push_back(std::move(v)); });
    return out;
}

inline BigCount count_mas(const WordIndex& idx) { return count_paths(build_mas_skeleton(idx).dag()); }

}  // namespace absent
