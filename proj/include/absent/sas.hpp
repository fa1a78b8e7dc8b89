#pragma once

#include <vector>

#include "absent/skeleton.hpp"
#include "absent/skeleton_words.hpp"
#include "absent/word_index.hpp"

namespace absent {

/// Skeleton whose paths s, i_1, ..., i_k, n+a, f are exactly the shortest
/// absent subsequences w[i_1]...w[i_k]a. Level l in [1:k] holds the first
/// occurrences in arch l that start an SAS suffix; level k+1 holds one
/// virtual node n+a per usable final letter a.
class SasSkeleton {
public:
    const SkeletonDag& dag() const noexcept { return dag_; }

    /// Word position of v, or n+a for the letter node of a; 0 for s and n+sigma+1 for f.
    Pos label(Node v) const { return label_[static_cast<std::size_t>(v)]; }

    Letter node_letter(Node v) const {
        const Pos p = label(v);
        return p <= n_ ? (*word_)[p] : static_cast<Letter>(p - n_);
    }

    void append_letter(Node, Node v, std::vector<Letter>& out) const {
        if (v != dag_.sink()) out.push_back(node_letter(v));
    }

    friend SasSkeleton build_sas_skeleton(const WordIndex& idx);

private:
    SkeletonDag dag_;
    std::vector<Pos> label_;
    const Word* word_ = nullptr;
    Pos n_ = 0;
};

inline SasSkeleton build_sas_skeleton(const WordIndex& idx) {
    const Pos n = idx.n(), k = idx.iota();
    const Letter sigma = idx.sigma();
    const auto& ends = idx.arches().arch_ends;
    auto arch_begin = [&](Pos l) { return l == 1 ? 1 : ends[static_cast<std::size_t>(l) - 2] + 1; };
    auto arch_end = [&](Pos l) { return ends[static_cast<std::size_t>(l) - 1]; };

    std::vector<char> in_rest(sigma + 1, 0);
    for (Pos i = idx.arches().rest_start; i <= n; ++i) in_rest[idx[i]] = 1;

    // F_l and the filtered G_l, both increasing, stored level after level.
    std::vector<Pos> F, G;
    std::vector<std::size_t> f_begin{0}, g_begin{0};
    for (Pos l = 1; l <= k; ++l) {
        for (Pos i = arch_begin(l); i <= arch_end(l); ++i) {
            const Letter a = idx[i];
            if (idx.first_pos_arch(l, a) == i && idx.dist(i) == k - l + 2) F.push_back(i);
            if (idx.last_pos_arch(l, a) == i) {
                const bool keep = l < k ? idx.dist(idx.first_pos_arch(l + 1, a)) == k - l + 1 : !in_rest[a];
                if (keep) G.push_back(i);
            }
        }
        f_begin.push_back(F.size());
        g_begin.push_back(G.size());
    }

    SasSkeleton sk;
    sk.word_ = &idx.word();
    sk.n_ = n;
    // Node ids follow the level order; node_of maps labels to ids.
    std::vector<Node> node_of(static_cast<std::size_t>(n) + sigma + 1, kNone);
    std::vector<Node> order;
    std::vector<std::size_t> level_begin;
    auto add = [&](Pos label) {
        const auto id = static_cast<Node>(sk.label_.size());
        sk.label_.push_back(label);
        order.push_back(id);
        if (label >= 1 && label <= n + static_cast<Pos>(sigma)) node_of[static_cast<std::size_t>(label)] = id;
        return id;
    };

    level_begin.push_back(0);
    add(0);
    level_begin.push_back(order.size());
    for (auto t = f_begin[1]; t > f_begin[0]; --t) add(F[t - 1]);
    for (Pos l = 2; l <= k + 1; ++l) {
        level_begin.push_back(order.size());
        const auto gb = g_begin[static_cast<std::size_t>(l) - 2], ge = g_begin[static_cast<std::size_t>(l) - 1];
        for (auto t = ge; t > gb; --t) {
            const Letter a = idx[G[t - 1]];
            add(l <= k ? idx.first_pos_arch(l, a) : n + static_cast<Pos>(a));
        }
    }
    level_begin.push_back(order.size());
    const Node f = add(n + static_cast<Pos>(sigma) + 1);
    level_begin.push_back(order.size());

    std::vector<Node> down(order.size(), kNone);
    for (Pos l = 1; l <= k; ++l) {
        const auto fb = f_begin[static_cast<std::size_t>(l) - 1], fe = f_begin[static_cast<std::size_t>(l)];
        const auto gb = g_begin[static_cast<std::size_t>(l) - 1], ge = g_begin[static_cast<std::size_t>(l)];
        auto g = gb;
        for (auto t = fb; t < fe; ++t) {
            const Pos i = F[t];
            while (g < ge && G[g] <= i) ++g;
            // g - 1 is the largest entry of G_l at or before i.
            const Letter a = idx[G[g - 1]];
            const Pos target = l < k ? idx.first_pos_arch(l + 1, a) : n + static_cast<Pos>(a);
            down[static_cast<std::size_t>(node_of[static_cast<std::size_t>(i)])] = node_of[static_cast<std::size_t>(target)];
        }
    }
    for (auto t = level_begin[static_cast<std::size_t>(k) + 1]; t < level_begin[static_cast<std::size_t>(k) + 2]; ++t)
        down[t] = f;

    std::vector<Node> targets;
    if (level_begin[2] > level_begin[1]) targets.push_back(order[level_begin[1]]);
    sk.dag_ = SkeletonDag::from_levels(std::move(order), std::move(level_begin), std::move(down), std::move(targets));
    return sk;
}

using SasEnumerator = SkeletonWordEnumerator<SasSkeleton>;

template <class F>
void for_each_sas(const SasSkeleton& sk, F&& f) {
    for_each_word(sk, std::forward<F>(f));
}

inline std::vector<std::vector<Letter>> enumerate_sas(const WordIndex& idx) {
    auto sk = build_sas_skeleton(idx);
    std::vector<std::vector<Letter>> out;
    for_each_sas(sk, [&](std::vector<Letter> v) { out.push_back(std::move(v)); });
    return out;
}

inline BigCount count_sas(const WordIndex& idx) { return count_paths(build_sas_skeleton(idx).dag()); }

}  // namespace absent
