#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace absent;
using absent::testing::index_of;

TEST(BuildWord, RemapsBytesByFirstOccurrence) {
    const auto w = build_word("abacab", AlphabetMode::Bytes);
    EXPECT_EQ(std::vector<Letter>(w.letters().begin(), w.letters().end()), (std::vector<Letter>{1, 2, 1, 3, 1, 2}));
    EXPECT_EQ(w.sigma(), 3u);
    EXPECT_EQ(w.render(w.letters()), "abacab");
}

TEST(BuildWord, ParsesInts) {
    const auto w = build_word("1 1 2", AlphabetMode::Ints);
    EXPECT_EQ(std::vector<Letter>(w.letters().begin(), w.letters().end()), (std::vector<Letter>{1, 1, 2}));
    EXPECT_EQ(w.sigma(), 2u);
    EXPECT_EQ(build_word(" 40\n7 40 ", AlphabetMode::Ints).render(std::vector<Letter>{2, 1}), "7 40");
}

TEST(BuildWord, RejectsBadInput) {
    auto code = [](std::string_view raw, AlphabetMode m) {
        try {
            build_word(raw, m);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::MalformedRecord;
    };
    EXPECT_EQ(code("", AlphabetMode::Bytes), ErrorCode::EmptyInput);
    EXPECT_EQ(code("  ", AlphabetMode::Ints), ErrorCode::EmptyInput);
    EXPECT_EQ(code("1 0", AlphabetMode::Ints), ErrorCode::InvalidSymbol);
    EXPECT_EQ(code("1 x", AlphabetMode::Ints), ErrorCode::InvalidSymbol);
    EXPECT_EQ(code("-3", AlphabetMode::Ints), ErrorCode::InvalidSymbol);
}

TEST(Arches, ExampleWords) {
    const auto a = index_of("1121332211322");
    EXPECT_EQ(a.arches().arch_ends, (std::vector<Pos>{5, 9, 12}));
    EXPECT_EQ(a.iota(), 3);
    EXPECT_EQ(a.arches().rest_start, 13);

    const auto b = index_of("1223313");
    EXPECT_EQ(b.arches().arch_ends, (std::vector<Pos>{4}));
    EXPECT_EQ(b.iota(), 1);
    EXPECT_EQ(b.arches().rest_start, 5);
}

TEST(Arches, UnaryWordHasOneArchPerLetter) {
    const auto idx = index_of("1111");
    EXPECT_EQ(idx.arches().arch_ends, (std::vector<Pos>{1, 2, 3, 4}));
    EXPECT_EQ(idx.arches().rest_start, 5);
}

TEST(NextPrev, TwoLetterUnary) {
    const auto idx = index_of("11");
    EXPECT_EQ(idx.next(1), 2);
    EXPECT_EQ(idx.next(2), 3);
    EXPECT_EQ(idx.prev(1), 0);
    EXPECT_EQ(idx.prev(2), 1);
}

TEST(NextPos, Examples) {
    const auto idx = index_of("1223313");
    EXPECT_EQ(next_pos(idx, 2, 5), 8);
    EXPECT_EQ(next_pos(idx, 3, 1), 4);
    EXPECT_EQ(next_pos(idx, 1, 1), 1);
    EXPECT_EQ(next_pos(idx, 3, 8), 8);
    EXPECT_THROW(next_pos(idx, 3, 9), Error);
    EXPECT_THROW(next_pos(idx, 4, 1), Error);
}

TEST(RangeMaxNext, Examples) {
    const auto idx = index_of("11");
    EXPECT_EQ(idx.range_max_next(1, 2), 2);
    EXPECT_EQ(idx.range_max_next(3, 2), kNoPos);
}

TEST(RangeMaxNext, MatchesNaiveScanWithLeftmostTies) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        const Pos n = 1 + static_cast<Pos>(rng() % 64);
        const auto idx = build_index(Word::from_letters(absent::testing::random_letters(rng, n, 1 + rng() % 5)));
        for (Pos i = 1; i <= n; ++i) {
            Pos best = i;
            for (Pos j = i; j <= n; ++j) {
                if (idx.next(j) > idx.next(best)) best = j;
                ASSERT_EQ(idx.range_max_next(i, j), best) << "i=" << i << " j=" << j;
            }
        }
    }
}

TEST(RangeMaxIndex, LongRangesAcrossBlocks) {
    std::mt19937_64 rng(5);
    std::vector<Pos> values(1001);
    for (auto& v : values) v = static_cast<Pos>(rng() % 7);
    const RangeMaxIndex rmq(values);
    for (int q = 0; q < 20000; ++q) {
        Pos i = 1 + static_cast<Pos>(rng() % 1000), j = 1 + static_cast<Pos>(rng() % 1000);
        if (i > j) std::swap(i, j);
        Pos best = i;
        for (Pos x = i; x <= j; ++x)
            if (values[static_cast<std::size_t>(x)] > values[static_cast<std::size_t>(best)]) best = x;
        ASSERT_EQ(rmq.query(i, j), best);
    }
}

namespace {

bool embeds_from(const Word& w, Pos p, const std::vector<Letter>& v) {
    for (Letter a : v) {
        while (p <= w.size() && w[p] != a) ++p;
        if (p > w.size()) return false;
        ++p;
    }
    return true;
}

// Length of a shortest string over alph(w) starting with w[p] that is absent
// from w[p:n], trying every candidate in order of length.
Pos brute_dist(const Word& w, Pos p) {
    for (Pos len = 1;; ++len) {
        std::vector<Letter> v(static_cast<std::size_t>(len), 1);
        v[0] = w[p];
        for (;;) {
            if (!embeds_from(w, p, v)) return len;
            std::size_t t = v.size();
            while (t > 1 && v[t - 1] == w.sigma()) v[--t] = 1;
            if (t == 1) break;
            ++v[t - 1];
        }
    }
}

void expect_index_invariants(const WordIndex& idx) {
    const Pos n = idx.n();
    for (Pos i = 1; i <= n; ++i) {
        if (idx.next(i) <= n) {
            EXPECT_EQ(idx.prev(idx.next(i)), i);
        }
        if (idx.prev(i) >= 1) {
            EXPECT_EQ(idx.next(idx.prev(i)), i);
        }
    }
    // Arches concatenate back to w, each holds every letter, and its last letter is unique in it.
    Pos begin = 1;
    for (Pos l = 1; l <= idx.iota(); ++l) {
        const Pos end = idx.arches().arch_ends[static_cast<std::size_t>(l) - 1];
        for (Letter a = 1; a <= idx.sigma(); ++a) {
            const Pos f = idx.first_pos_arch(l, a), g = idx.last_pos_arch(l, a);
            ASSERT_TRUE(f >= begin && f <= end && g >= f && g <= end);
            EXPECT_EQ(idx[f], a);
            EXPECT_EQ(idx[g], a);
        }
        EXPECT_EQ(idx.first_pos_arch(l, idx[end]), end);
        begin = end + 1;
    }
    EXPECT_EQ(begin, idx.arches().rest_start);
    std::set<Letter> rest;
    for (Pos i = begin; i <= n; ++i) rest.insert(idx[i]);
    EXPECT_LT(rest.size(), idx.sigma());
}

}  // namespace

TEST(Dist, MatchesBruteForceOnExample) {
    const auto w = Word::from_digits("11211111");
    const auto idx = build_index(w);
    for (Pos i = 1; i <= w.size(); ++i) {
        EXPECT_EQ(idx.dist(i), brute_dist(w, i)) << "i=" << i;
    }
}

TEST(Dist, ExhaustiveSmallWords) {
    for (Pos n = 1; n <= 10; ++n) {
        absent::testing::for_each_rgs(n, 3, [&](const std::vector<Letter>& v) {
            const auto w = Word::from_letters(v);
            const auto idx = build_index(w);
            for (Pos i = 1; i <= n; ++i) {
                ASSERT_EQ(idx.dist(i), brute_dist(w, i));
            }
        });
    }
}

TEST(Dist, RandomWords) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const auto w = Word::from_letters(absent::testing::random_letters(rng, 1 + static_cast<Pos>(rng() % 40), 1 + rng() % 5));
        const auto idx = build_index(w);
        for (Pos i = 1; i <= w.size(); ++i) {
            ASSERT_EQ(idx.dist(i), brute_dist(w, i));
        }
    }
}

TEST(WordIndex, StructuralInvariantsAndIotaByBruteForce) {
    for (Pos n = 1; n <= 12; ++n) {
        absent::testing::for_each_rgs(n, 3, [&](const std::vector<Letter>& v) {
            const auto w = Word::from_letters(v);
            const auto idx = build_index(w);
            expect_index_invariants(idx);
            ASSERT_EQ(idx.iota(), oracle::brute_iota(w));
        });
    }
}
