#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace absent;
using absent::testing::digit_set;
using absent::testing::index_of;
using absent::testing::to_set;

namespace {

void expect_sas_agree(const WordIndex& idx) {
    const auto want = oracle::brute_sas(idx.word());
    const auto sk = build_sas_skeleton(idx);
    ASSERT_TRUE(validate(sk.dag().to_spec()).empty());
    ASSERT_LE(sk.dag().node_count(), idx.n() + static_cast<Pos>(idx.sigma()) + 2);

    const auto got = enumerate_sas(idx);
    ASSERT_EQ(to_set(got), want);
    ASSERT_EQ(got.size(), want.size());
    ASSERT_EQ(count_sas(idx), want.size());

    SasEnumerator e(sk);
    std::vector<Letter> cur;
    std::size_t t = 0;
    while (e.next()) {
        ASSERT_LE(e.script().size, EditScript<Node>::kMaxSegments);
        apply_script_letters(sk, e.script(), cur);
        ASSERT_EQ(cur, got[t]);
        ASSERT_EQ(cur.size(), static_cast<std::size_t>(idx.iota()) + 1);
        ++t;
    }
    ASSERT_EQ(t, got.size());
}

}  // namespace

TEST(SasSkeleton, RunningExampleLevels) {
    const auto idx = index_of("1121332211322");
    const auto sk = build_sas_skeleton(idx);
    const auto& g = sk.dag();
    auto labels = [&](Pos l) {
        std::vector<Pos> out;
        for (Node v : g.level_nodes(l)) out.push_back(sk.label(v));
        return out;
    };
    EXPECT_EQ(g.m(), 5);
    EXPECT_EQ(labels(1), (std::vector<Pos>{5, 3}));
    EXPECT_EQ(labels(2), (std::vector<Pos>{6, 9, 7}));
    EXPECT_EQ(labels(3), (std::vector<Pos>{10, 12, 11}));
    EXPECT_EQ(labels(4), (std::vector<Pos>{13 + 3, 13 + 1}));

    std::set<std::pair<Pos, Pos>> down;
    for (Pos l = 1; l <= 3; ++l)
        for (Node v : g.level_nodes(l)) down.emplace(sk.label(v), sk.label(g.down(v)));
    const std::set<std::pair<Pos, Pos>> want{{5, 6}, {3, 7}, {6, 11}, {7, 11}, {9, 10}, {10, 13 + 1}, {11, 13 + 3}, {12, 13 + 3}};
    EXPECT_EQ(down, want);
}

TEST(SasSkeleton, SingleSasIsOnePath) {
    const auto idx = index_of("1223313");
    const auto sk = build_sas_skeleton(idx);
    const auto paths = enumerate_paths(sk.dag());
    ASSERT_EQ(paths.size(), 1u);
    std::vector<Pos> labels;
    for (Node v : paths[0]) labels.push_back(sk.label(v));
    EXPECT_EQ(labels, (std::vector<Pos>{0, 4, 7 + 2, 7 + 3 + 1}));
}

TEST(EnumerateSas, Examples) {
    EXPECT_EQ(to_set(enumerate_sas(index_of("1223313"))), digit_set({"32"}));
    EXPECT_EQ(to_set(enumerate_sas(index_of("11211111"))), digit_set({"22"}));
    EXPECT_EQ(count_sas(index_of("1223313")), 1);
    EXPECT_EQ(count_sas(index_of("11211111")), 1);
    EXPECT_EQ(to_set(enumerate_sas(index_of("111"))), digit_set({"1111"}));
    const auto w = index_of("1121332211322");
    EXPECT_EQ(count_sas(w), oracle::brute_sas(w.word()).size());
}

TEST(EnumerateSas, UnaryWordIsAChain) {
    const auto idx = index_of("11111");
    const auto sk = build_sas_skeleton(idx);
    for (Pos l = 0; l <= sk.dag().m(); ++l) {
        EXPECT_EQ(sk.dag().level_nodes(l).size(), 1u);
    }
    SasEnumerator e(sk);
    ASSERT_TRUE(e.next());
    EXPECT_EQ(e.current(), std::vector<Letter>(6, 1));
    EXPECT_FALSE(e.next());
}

TEST(EnumerateSas, ExhaustiveSmallWords) {
    for (Pos n = 1; n <= 10; ++n)
        absent::testing::for_each_rgs(n, 3, [](const std::vector<Letter>& v) { expect_sas_agree(build_index(Word::from_letters(v))); });
}

TEST(EnumerateSas, RandomWords) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 500; ++it) {
        const Pos n = 1 + static_cast<Pos>(rng() % 40);
        expect_sas_agree(build_index(Word::from_letters(absent::testing::random_letters(rng, n, 1 + rng() % 6))));
    }
}
