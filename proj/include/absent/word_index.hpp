#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "absent/core.hpp"
#include "absent/rmq.hpp"
#include "absent/word.hpp"

namespace absent {

/// Arch factorization w = ar(1) ... ar(k) rest, as arch end positions.
struct ArchFactorization {
    std::vector<Pos> arch_ends;  // e_1 < ... < e_k
    Pos rest_start = 1;          // e_k + 1
    Pos iota = 0;
};

/// Every per-word array the enumerators rely on. Immutable after
/// build_index(); all position arrays are 1-based with index 0 unused.
class WordIndex {
public:
    const Word& word() const noexcept { return word_; }
    Pos n() const noexcept { return n_; }
    Letter sigma() const noexcept { return sigma_; }
    Letter operator[](Pos i) const { return word_[i]; }

    const ArchFactorization& arches() const noexcept { return arches_; }
    Pos iota() const noexcept { return arches_.iota; }

    /// Next/previous occurrence of w[i]; n+1 and 0 when there is none.
    Pos next(Pos i) const { return next_[static_cast<std::size_t>(i)]; }
    Pos prev(Pos i) const { return prev_[static_cast<std::size_t>(i)]; }
    std::span<const Pos> next_array() const { return next_; }
    std::span<const Pos> prev_array() const { return prev_; }

    /// Length of a shortest absent subsequence of w[i:n] that starts with w[i].
    Pos dist(Pos i) const { return dist_[static_cast<std::size_t>(i)]; }

    /// Universality index of w[i:n] over alph(w); i in [1:n+1].
    Pos suffix_iota(Pos i) const { return suffix_iota_[static_cast<std::size_t>(i)]; }

    /// Arch containing position i, or iota()+1 for positions of the rest.
    Pos arch_of(Pos i) const { return arch_of_[static_cast<std::size_t>(i)]; }

    /// Leftmost/rightmost occurrence of a inside arch l (1 <= l <= iota), 0 if none.
    Pos first_pos_arch(Pos l, Letter a) const { return first_pos_arch_[cell(l, a)]; }
    Pos last_pos_arch(Pos l, Letter a) const { return last_pos_arch_[cell(l, a)]; }

    /// Increasing positions of letter a, and the rank of i among the occurrences of w[i].
    std::span<const Pos> occurrences(Letter a) const {
        return {occ_.data() + occ_begin_[a], occ_.data() + occ_begin_[a + 1]};
    }
    Pos rank(Pos i) const { return rank_[static_cast<std::size_t>(i)]; }
    Pos first_occurrence(Letter a) const { return occ_[occ_begin_[a]]; }
    Pos last_occurrence(Letter a) const { return occ_[occ_begin_[a + 1] - 1]; }

    /// Smallest position in [i:j] maximizing next(); kNoPos when i > j.
    Pos range_max_next(Pos i, Pos j) const { return rmq_.query(std::max<Pos>(i, 1), std::min(j, n_)); }

    friend WordIndex build_index(Word w);

private:
    std::size_t cell(Pos l, Letter a) const {
        return static_cast<std::size_t>(l - 1) * sigma_ + (a - 1);
    }

    Word word_;
    Pos n_ = 0;
    Letter sigma_ = 0;
    ArchFactorization arches_;
    std::vector<Pos> next_, prev_, dist_, suffix_iota_, arch_of_;
    std::vector<Pos> first_pos_arch_, last_pos_arch_;
    std::vector<std::size_t> occ_begin_;
    std::vector<Pos> occ_, rank_;
    RangeMaxIndex rmq_;
};

inline WordIndex build_index(Word w) {
    WordIndex idx;
    const Pos n = w.size();
    const Letter sigma = w.sigma();
    if (n < 1) throw Error(ErrorCode::EmptyInput, "word must be non-empty");
    idx.n_ = n;
    idx.sigma_ = sigma;
    const auto N = static_cast<std::size_t>(n);

    // next/prev through the last seen occurrence of each letter.
    idx.next_.assign(N + 2, n + 1);
    idx.prev_.assign(N + 2, 0);
    {
        std::vector<Pos> seen(sigma + 1, 0);
        for (Pos i = 1; i <= n; ++i) {
            const Letter a = w[i];
            if (seen[a] != 0) {
                idx.prev_[static_cast<std::size_t>(i)] = seen[a];
                idx.next_[static_cast<std::size_t>(seen[a])] = i;
            }
            seen[a] = i;
        }
    }

    // Occurrence lists in CSR form.
    idx.occ_begin_.assign(sigma + 2, 0);
    for (Pos i = 1; i <= n; ++i) ++idx.occ_begin_[w[i] + 1];
    for (Letter a = 1; a <= sigma + 1; ++a) idx.occ_begin_[a] += idx.occ_begin_[a - 1];
    idx.occ_.assign(N, 0);
    idx.rank_.assign(N + 2, 0);
    {
        std::vector<std::size_t> fill(idx.occ_begin_.begin(), idx.occ_begin_.end());
        for (Pos i = 1; i <= n; ++i) {
            const Letter a = w[i];
            idx.rank_[static_cast<std::size_t>(i)] = static_cast<Pos>(fill[a] - idx.occ_begin_[a]);
            idx.occ_[fill[a]++] = i;
        }
    }

    // Greedy arch factorization from the left.
    {
        std::vector<Pos> stamp(sigma + 1, 0);
        Pos arch = 1;
        Letter distinct = 0;
        idx.arch_of_.assign(N + 2, 0);
        for (Pos i = 1; i <= n; ++i) {
            const Letter a = w[i];
            idx.arch_of_[static_cast<std::size_t>(i)] = arch;
            if (stamp[a] != arch) {
                stamp[a] = arch;
                if (++distinct == sigma) {
                    idx.arches_.arch_ends.push_back(i);
                    ++arch;
                    distinct = 0;
                }
            }
        }
        idx.arches_.iota = static_cast<Pos>(idx.arches_.arch_ends.size());
        idx.arches_.rest_start = idx.arches_.iota == 0 ? 1 : idx.arches_.arch_ends.back() + 1;
    }

    // Suffix universality via the minimal full-alphabet window starting at each j.
    idx.suffix_iota_.assign(N + 2, 0);
    idx.dist_.assign(N + 2, 0);
    {
        std::vector<Pos> count(sigma + 1, 0);
        Letter distinct = 0;
        Pos e = n;
        for (Pos j = n; j >= 1; --j) {
            if (count[w[j]]++ == 0) ++distinct;
            if (distinct == sigma) {
                while (count[w[e]] > 1) --count[w[e--]];
                idx.suffix_iota_[static_cast<std::size_t>(j)] = 1 + idx.suffix_iota_[static_cast<std::size_t>(e) + 1];
            }
        }
        for (Pos i = 1; i <= n; ++i)
            idx.dist_[static_cast<std::size_t>(i)] = idx.suffix_iota_[static_cast<std::size_t>(i) + 1] + 2;
    }

    // First/last occurrence of each letter per arch.
    {
        const auto k = static_cast<std::size_t>(idx.arches_.iota);
        idx.first_pos_arch_.assign(k * sigma, 0);
        idx.last_pos_arch_.assign(k * sigma, 0);
        for (Pos i = 1; i < idx.arches_.rest_start; ++i) {
            const std::size_t c = idx.cell(idx.arch_of(i), w[i]);
            if (idx.first_pos_arch_[c] == 0) idx.first_pos_arch_[c] = i;
            idx.last_pos_arch_[c] = i;
        }
    }

    idx.rmq_ = RangeMaxIndex(std::span<const Pos>(idx.next_.data(), N + 1));
    idx.word_ = std::move(w);
    return idx;
}

/// nextpos[a, i]: first occurrence of a at or after i, n+1 if none.
inline Pos next_pos(const WordIndex& idx, Letter a, Pos i) {
    if (a < 1 || a > idx.sigma()) throw Error(ErrorCode::OutOfRange, "letter " + std::to_string(a) + " outside alphabet");
    if (i < 1 || i > idx.n() + 1) throw Error(ErrorCode::OutOfRange, "position " + std::to_string(i) + " outside [1:n+1]");
    auto occ = idx.occurrences(a);
    auto it = std::lower_bound(occ.begin(), occ.end(), i);
    return it == occ.end() ? idx.n() + 1 : *it;
}

/// Last occurrence of a at or before i, 0 if none.
inline Pos prev_pos(const WordIndex& idx, Letter a, Pos i) {
    if (a < 1 || a > idx.sigma()) throw Error(ErrorCode::OutOfRange, "letter " + std::to_string(a) + " outside alphabet");
    auto occ = idx.occurrences(a);
    auto it = std::upper_bound(occ.begin(), occ.end(), i);
    return it == occ.begin() ? 0 : *(it - 1);
}

}  // namespace absent
