#pragma once

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "absent/absent.hpp"
#include "absent/oracle.hpp"

namespace absent::testing {

inline WordIndex index_of(std::string_view digits) { return build_index(Word::from_digits(digits)); }

inline std::vector<Letter> letters(std::string_view digits) {
    std::vector<Letter> v;
    for (char c : digits) v.push_back(static_cast<Letter>(c - '0'));
    return v;
}

inline oracle::WordSet to_set(const std::vector<std::vector<Letter>>& v) { return {v.begin(), v.end()}; }

inline oracle::WordSet digit_set(std::initializer_list<std::string_view> words) {
    oracle::WordSet out;
    for (auto w : words) out.insert(letters(w));
    return out;
}

inline bool distinct(const std::vector<std::vector<Letter>>& v) { return to_set(v).size() == v.size(); }

/// Calls f on every word of length n over at most sigma letters, one per
/// first-occurrence-normalised class (restricted growth strings).
inline void for_each_rgs(Pos n, Letter sigma, const std::function<void(const std::vector<Letter>&)>& f) {
    std::vector<Letter> w;
    std::function<void(Letter)> grow = [&](Letter used) {
        if (static_cast<Pos>(w.size()) == n) {
            f(w);
            return;
        }
        for (Letter a = 1; a <= std::min<Letter>(used + 1, sigma); ++a) {
            w.push_back(a);
            grow(std::max(used, a));
            w.pop_back();
        }
    };
    grow(0);
}

inline std::vector<Letter> random_letters(std::mt19937_64& rng, Pos n, Letter sigma) {
    std::uniform_int_distribution<Letter> pick(1, sigma);
    std::vector<Letter> w(static_cast<std::size_t>(n));
    for (auto& a : w) a = pick(rng);
    return w;
}

/// A random valid skeleton with at most max_nodes nodes: random level sizes,
/// each inner node pointing to a random node on some deeper level, and the
/// source reaching a random node on a random set of levels.
inline SkeletonDag random_skeleton(std::mt19937_64& rng, Node max_nodes) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int m = uniform(1, 7);
    std::vector<std::size_t> begin{0, 1};
    Node count = 1;
    for (int l = 1; l < m; ++l) {
        const int budget = std::max(1, (max_nodes - 1 - count - (m - l)) / (m - l));
        count += uniform(1, std::min(budget, 8));
        begin.push_back(static_cast<std::size_t>(count));
    }
    ++count;
    begin.push_back(static_cast<std::size_t>(count));
    std::vector<Node> order(static_cast<std::size_t>(count));
    for (Node v = 0; v < count; ++v) order[static_cast<std::size_t>(v)] = v;

    auto random_on = [&](int l) {
        return static_cast<Node>(uniform(static_cast<int>(begin[static_cast<std::size_t>(l)]), static_cast<int>(begin[static_cast<std::size_t>(l) + 1]) - 1));
    };
    std::vector<Node> down(static_cast<std::size_t>(count), kNone);
    for (int l = 1; l < m; ++l)
        for (auto v = begin[static_cast<std::size_t>(l)]; v < begin[static_cast<std::size_t>(l) + 1]; ++v) down[v] = random_on(uniform(l + 1, m));
    std::vector<Node> targets;
    for (int l = 1; l <= m; ++l)
        if (uniform(0, 2) != 0 || l == 1) targets.push_back(random_on(l));
    return SkeletonDag::from_levels(std::move(order), std::move(begin), std::move(down), std::move(targets));
}

/// The skeleton with levels {v1,v2,v3}, {v4,v5}, {v6,v7,v8} used throughout
/// the skeleton tests. Node ids: s = 0, v1..v8 = 1..8, f = 9.
inline SkeletonDag sample_skeleton() {
    SkeletonSpec spec;
    spec.node_count = 10;
    spec.source = 0;
    spec.sink = 9;
    spec.level = {0, 1, 1, 1, 2, 2, 3, 3, 3, 4};
    spec.edges = {{0, 1}, {0, 4}, {1, 5}, {2, 7}, {3, 5}, {4, 9}, {5, 6}, {6, 9}, {7, 9}, {8, 9},
                  {1, 2}, {2, 3}, {4, 5}, {6, 7}, {7, 8}};
    return SkeletonDag::from_spec(spec);
}

}  // namespace absent::testing
