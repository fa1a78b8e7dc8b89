#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "absent/skeleton.hpp"
#include "absent/word.hpp"

// Brute-force references. Everything here scans the word directly and shares
// no code with the index, skeleton or enumeration modules.
namespace absent::oracle {

using WordSet = std::set<std::vector<Letter>>;

inline constexpr Pos kSasGuard = 64;
inline constexpr Pos kMasDfsGuard = 64;
inline constexpr Pos kMasDefinitionalGuard = 12;
inline constexpr std::size_t kOutputGuard = std::size_t{1} << 22;

namespace detail {

inline void guard(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::TooLarge, what);
}

/// Smallest p >= from with w[p] == a, or n+1.
inline Pos scan_next(const Word& w, Letter a, Pos from) {
    Pos p = from;
    while (p <= w.size() && w[p] != a) ++p;
    return p;
}

inline bool occurs_in(const Word& w, Letter a, Pos lo, Pos hi) {
    for (Pos p = lo; p <= hi; ++p)
        if (w[p] == a) return true;
    return false;
}

}  // namespace detail

inline bool naive_is_subsequence(std::span<const Letter> v, const Word& w) {
    Pos p = 1;
    for (const Letter a : v) {
        p = detail::scan_next(w, a, p);
        if (p > w.size()) return false;
        ++p;
    }
    return true;
}

/// Largest k such that every length-k string over alph(w) is a subsequence,
/// found by testing all strings of each length in turn.
inline Pos brute_iota(const Word& w, std::size_t budget = std::size_t{1} << 22) {
    const Letter sigma = w.sigma();
    for (Pos k = 1;; ++k) {
        std::size_t total = 1;
        for (Pos t = 0; t < k; ++t) {
            total *= sigma;
            detail::guard(total <= budget, "brute_iota: sigma^k exceeds budget");
        }
        std::vector<Letter> v(static_cast<std::size_t>(k), 1);
        for (std::size_t c = 0; c < total; ++c) {
            if (!naive_is_subsequence(v, w)) return k - 1;
            for (std::size_t t = v.size(); t-- > 0;) {
                if (v[t] < sigma) { ++v[t]; break; }
                v[t] = 1;
            }
        }
    }
}

/// All absent strings of minimum length. Candidates are grown letter by
/// letter; a branch is cut once its remaining suffix cannot become absent
/// within the letters left, using a naive shortest-absent-length table.
inline WordSet brute_sas(const Word& w) {
    const Pos n = w.size();
    detail::guard(n <= kSasGuard, "brute_sas: n exceeds " + std::to_string(kSasGuard));
    const Letter sigma = w.sigma();
    // shortest[p]: length of a shortest string absent from w[p:n].
    std::vector<Pos> shortest(static_cast<std::size_t>(n) + 2, 1);
    for (Pos p = n; p >= 1; --p) {
        Pos best = n + 2;
        for (Letter a = 1; a <= sigma; ++a) {
            const Pos q = detail::scan_next(w, a, p);
            best = std::min(best, q > n ? 1 : 1 + shortest[static_cast<std::size_t>(q) + 1]);
        }
        shortest[static_cast<std::size_t>(p)] = best;
    }
    const Pos L = shortest[1];

    WordSet out;
    std::vector<Letter> v;
    std::function<void(Pos)> grow = [&](Pos p) {
        for (Letter a = 1; a <= sigma; ++a) {
            const Pos q = detail::scan_next(w, a, p);
            v.push_back(a);
            const auto left = L - static_cast<Pos>(v.size());
            if (q > n) {
                if (left == 0) out.insert(v);
            } else if (left > 0 && shortest[static_cast<std::size_t>(q) + 1] <= left) {
                grow(q + 1);
            }
            v.pop_back();
        }
    };
    grow(1);
    return out;
}

/// MASs by the definition: for every distinct subsequence u of w and letter
/// b, keep ub when it is absent and each one-letter deletion is present.
inline WordSet brute_mas_definitional(const Word& w) {
    const Pos n = w.size();
    detail::guard(n <= kMasDefinitionalGuard, "brute_mas_definitional: n exceeds " + std::to_string(kMasDefinitionalGuard));
    const Letter sigma = w.sigma();
    WordSet out;
    std::vector<Letter> u;
    auto consider = [&] {
        for (Letter b = 1; b <= sigma; ++b) {
            std::vector<Letter> v = u;
            v.push_back(b);
            if (naive_is_subsequence(v, w)) continue;
            bool minimal = true;
            for (std::size_t t = 0; t < v.size() && minimal; ++t) {
                std::vector<Letter> d = v;
                d.erase(d.begin() + static_cast<std::ptrdiff_t>(t));
                minimal = naive_is_subsequence(d, w);
            }
            if (minimal) out.insert(std::move(v));
        }
    };
    // Leftmost embeddings visit each distinct subsequence exactly once.
    std::function<void(Pos)> walk = [&](Pos p) {
        consider();
        for (Letter a = 1; a <= sigma; ++a) {
            const Pos q = detail::scan_next(w, a, p);
            if (q > n) continue;
            u.push_back(a);
            walk(q + 1);
            u.pop_back();
        }
    };
    walk(1);
    return out;
}

/// MASs through the positional characterisation: the canonical embedding
/// i_1 < ... < i_m of the prefix has every letter v_r occurring in
/// w[i_{r-2}+1 : i_{r-1}], and the final letter occurs in w[i_{m-1}+1 : i_m]
/// but not after i_m.
inline WordSet brute_mas_dfs(const Word& w) {
    const Pos n = w.size();
    detail::guard(n <= kMasDfsGuard, "brute_mas_dfs: n exceeds " + std::to_string(kMasDfsGuard));
    const Letter sigma = w.sigma();
    WordSet out;
    std::vector<Letter> v;
    std::function<void(Pos, Pos)> walk = [&](Pos j, Pos i) {
        for (Letter b = 1; b <= sigma; ++b) {
            if (!detail::occurs_in(w, b, j + 1, i)) continue;
            const Pos q = detail::scan_next(w, b, i + 1);
            v.push_back(b);
            if (q > n) {
                out.insert(v);
                detail::guard(out.size() <= kOutputGuard, "brute_mas_dfs: output exceeds guard");
            } else {
                walk(i, q);
            }
            v.pop_back();
        }
    };
    for (Letter a = 1; a <= sigma; ++a) {
        v.push_back(a);
        walk(0, detail::scan_next(w, a, 1));
        v.pop_back();
    }
    return out;
}

inline WordSet brute_mas(const Word& w) {
    return w.size() <= kMasDefinitionalGuard ? brute_mas_definitional(w) : brute_mas_dfs(w);
}

inline Pos brute_longest_mas(const Word& w) {
    Pos best = 0;
    for (const auto& v : brute_mas_dfs(w)) best = std::max(best, static_cast<Pos>(v.size()));
    return best;
}

/// Every s-f path of the expanded DAG D(G), by plain depth-first search.
inline std::set<std::vector<Node>> brute_skeleton_paths(const SkeletonDag& g) {
    std::set<std::vector<Node>> out;
    std::vector<Node> path{g.source()};
    std::function<void(Node)> walk = [&](Node v) {
        if (v == g.sink()) {
            out.insert(path);
            return;
        }
        for (const Node c : expanded_children(g, v)) {
            path.push_back(c);
            walk(c);
            path.pop_back();
        }
    };
    walk(g.source());
    return out;
}

}  // namespace absent::oracle
