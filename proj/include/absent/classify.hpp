#pragma once

#include <span>
#include <string>
#include <vector>

#include "absent/core.hpp"
#include "absent/word_index.hpp"

namespace absent {

/// Greedy leftmost embedding of v in w. When v is absent, `positions` holds the
/// embedded prefix and `absent_at` is the 1-based index of the first letter of
/// v that could not be placed.
struct Embedding {
    std::vector<Pos> positions;
    Pos absent_at = 0;

    bool found() const noexcept { return absent_at == 0; }
};

namespace detail {

inline void check_letters(std::span<const Letter> v, const WordIndex& idx) {
    for (Letter a : v)
        if (a < 1 || a > idx.sigma())
            throw Error(ErrorCode::AlphabetMismatch, "letter " + std::to_string(a) + " is not in alph(w)");
}

}  // namespace detail

inline Embedding canonical_embedding(std::span<const Letter> v, const WordIndex& idx) {
    detail::check_letters(v, idx);
    Embedding e;
    e.positions.reserve(v.size());
    Pos cur = 0;
    for (std::size_t t = 0; t < v.size(); ++t) {
        cur = next_pos(idx, v[t], cur + 1);
        if (cur > idx.n()) {
            e.absent_at = static_cast<Pos>(t + 1);
            break;
        }
        e.positions.push_back(cur);
    }
    return e;
}

inline bool is_subsequence(std::span<const Letter> v, const WordIndex& idx) {
    return canonical_embedding(v, idx).found();
}

inline bool is_sas(std::span<const Letter> v, const WordIndex& idx) {
    detail::check_letters(v, idx);
    if (static_cast<Pos>(v.size()) != idx.iota() + 1) return false;
    return !is_subsequence(v, idx);
}

namespace detail {

// Positional conditions on an embedded prefix i_1 < ... < i_m: every letter
// from the second on must also occur between the two previous positions.
inline bool prefix_conditions(const std::vector<Pos>& pos, const WordIndex& idx) {
    for (std::size_t r = 1; r < pos.size(); ++r) {
        const Pos before = r >= 2 ? pos[r - 2] : 0;
        if (idx.prev(pos[r]) <= before) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_mas_prefix(std::span<const Letter> v, const WordIndex& idx) {
    if (v.empty()) return false;
    auto e = canonical_embedding(v, idx);
    return e.found() && detail::prefix_conditions(e.positions, idx);
}

inline bool is_mas(std::span<const Letter> v, const WordIndex& idx) {
    detail::check_letters(v, idx);
    // A single letter is never absent: the alphabet is exactly alph(w).
    if (v.size() < 2) return false;
    auto e = canonical_embedding(v.first(v.size() - 1), idx);
    if (!e.found() || !detail::prefix_conditions(e.positions, idx)) return false;
    const Letter b = v.back();
    const Pos im = e.positions.back();
    if (next_pos(idx, b, im + 1) <= idx.n()) return false;
    const Pos before = e.positions.size() >= 2 ? e.positions[e.positions.size() - 2] : 0;
    return prev_pos(idx, b, im) > before;
}

/// Extends an MAS-prefix v to the MAS v v[m]^(l+1), where l counts the
/// occurrences of v[m] after the end of the canonical embedding.
inline std::vector<Letter> complete_mas_prefix(std::span<const Letter> v, const WordIndex& idx) {
    if (!is_mas_prefix(v, idx)) throw Error(ErrorCode::NotMasPrefix, "input is not an MAS-prefix of w");
    const Pos im = canonical_embedding(v, idx).positions.back();
    const Letter a = v.back();
    const auto after = static_cast<Pos>(idx.occurrences(a).size()) - idx.rank(im) - 1;
    std::vector<Letter> out(v.begin(), v.end());
    out.insert(out.end(), static_cast<std::size_t>(after) + 1, a);
    return out;
}

}  // namespace absent
