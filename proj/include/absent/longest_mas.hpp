#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "absent/range_max_set.hpp"
#include "absent/word_index.hpp"

namespace absent {

/// D[i] is the length of the longest MAS-prefix whose canonical embedding ends
/// at i (0 when none does); back[i] is the previous position of one such
/// embedding, 0 for a first letter.
struct LongestMasTable {
    std::vector<Pos> D;
    std::vector<Pos> back;
};

/// Fills the table in one left-to-right pass, maintaining the set of
/// positions j' <= i < next[j'] whose D value is final. The observer, if
/// given, is called as observer(i, table, set) after iteration i.
template <class Observer>
LongestMasTable compute_longest_mas_table(const WordIndex& idx, Observer&& observer) {
    const Pos n = idx.n();
    LongestMasTable t;
    t.D.assign(static_cast<std::size_t>(n) + 1, 0);
    t.back.assign(static_cast<std::size_t>(n) + 1, 0);
    RangeMaxSet open(idx.sigma());
    // pending[q] chains the positions h whose best predecessor is q.
    std::vector<Pos> pending_head(static_cast<std::size_t>(n) + 1, 0), pending_next(static_cast<std::size_t>(n) + 1, 0);

    for (Letter a = 1; a <= idx.sigma(); ++a) {
        const Pos i = idx.first_occurrence(a);
        t.D[static_cast<std::size_t>(i)] = 1;
        open.insert(i, 1);
    }
    observer(Pos{0}, std::as_const(t), std::as_const(open));
    for (Pos i = 1; i <= n; ++i) {
        const Pos h = idx.next(i);
        if (h <= n) {
            const auto best = open.range_max(i, h - 1);
            const auto uh = static_cast<std::size_t>(h);
            t.D[uh] = best->value + 1;
            t.back[uh] = best->key;
            pending_next[uh] = pending_head[static_cast<std::size_t>(best->key)];
            pending_head[static_cast<std::size_t>(best->key)] = h;
        }
        open.erase(i);
        for (Pos s = pending_head[static_cast<std::size_t>(i)]; s != 0; s = pending_next[static_cast<std::size_t>(s)])
            open.insert(s, t.D[static_cast<std::size_t>(s)]);
        observer(i, std::as_const(t), std::as_const(open));
    }
    return t;
}

inline LongestMasTable compute_longest_mas_table(const WordIndex& idx) {
    return compute_longest_mas_table(idx, [](Pos, const LongestMasTable&, const RangeMaxSet&) {});
}

inline Pos longest_mas_length(const WordIndex& idx) {
    const auto t = compute_longest_mas_table(idx);
    return 1 + *std::max_element(t.D.begin() + 1, t.D.end());
}

/// One longest MAS: the longest MAS-prefix with the leftmost end position,
/// followed by its own last letter.
inline std::vector<Letter> longest_mas(const WordIndex& idx) {
    const auto t = compute_longest_mas_table(idx);
    const auto best = std::max_element(t.D.begin() + 1, t.D.end());
    const auto h = static_cast<Pos>(best - t.D.begin());
    std::vector<Letter> out;
    for (Pos p = h; p != 0; p = t.back[static_cast<std::size_t>(p)]) out.push_back(idx[p]);
    std::reverse(out.begin(), out.end());
    out.push_back(idx[h]);
    return out;
}

}  // namespace absent
