#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = absent::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Arches) {
    const auto r = run({"arches"}, "1121332211322\n");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "11213|3221|132|2\niota=3\n");
    EXPECT_EQ(run({"universality"}, "1223313").out, "iota=1\n");
}

TEST(Cli, SasCount) {
    EXPECT_EQ(run({"sas", "--count"}, "1223313\n").out, "1\n");
    EXPECT_EQ(run({"sas"}, "1223313").out, "32\n");
}

TEST(Cli, LongestMas) {
    EXPECT_EQ(run({"longest-mas"}, "11121222\n").out, "11112222\n");
    EXPECT_EQ(run({"longest-mas", "--length-only"}, "11121222\n").out, "8\n");
}

TEST(Cli, RendersOriginalSymbols) {
    EXPECT_EQ(run({"sas"}, "abba").out, "bbb\nbaa\nbab\naaa\naab\n");
    EXPECT_EQ(run({"--alphabet", "ints", "mas", "--count"}, "7 7 12").out, "3\n");
    const auto r = run({"mas", "--alphabet", "ints"}, "7 7 12");
    EXPECT_EQ(r.out, "7 7 7\n12 12\n12 7\n");
}

TEST(Cli, Check) {
    EXPECT_EQ(run({"check", "--kind", "mas", "--pattern", "1112"}, "11211111").out, "true\n");
    EXPECT_EQ(run({"check", "--kind", "mas", "--pattern", "212"}, "11211111").out, "false\n");
    EXPECT_EQ(run({"check", "--kind", "subsequence", "--pattern", "211"}, "1121332211322").out, "true\n");
    EXPECT_EQ(run({"check", "--kind", "sas", "--pattern", "32", "--verify"}, "1223313").out, "true\n");
    EXPECT_EQ(run({"check", "--kind", "mas-prefix", "--pattern", "11", "--verify"}, "1223313").out, "true\n");
}

TEST(Cli, LimitStopsEarly) {
    const auto r = run({"mas", "--limit", "2"}, "1121332211322");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2);
    EXPECT_EQ(run({"mas", "--limit", "2", "--verify"}, "1121332211322").code, 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}, "1").code, 1);
    EXPECT_EQ(run({"frobnicate"}, "1").code, 1);
    EXPECT_EQ(run({"sas", "--count", "--limit", "3"}, "1").code, 1);
    EXPECT_EQ(run({"sas"}, "").code, 2);
    EXPECT_EQ(run({"sas"}, "\n").code, 2);
    EXPECT_EQ(run({"--alphabet", "ints", "sas"}, "1 x").code, 2);
    EXPECT_EQ(run({"check", "--kind", "mas", "--pattern", "19"}, "11211111").code, 2);
    EXPECT_EQ(run({"replay"}, "garbage\n").code, 2);
    EXPECT_EQ(run({"--help"}, "").code, 0);
}

TEST(Cli, VerifyPassesAndSkipsBeyondGuards) {
    for (const char* cmd : {"sas", "mas", "arches", "longest-mas"}) {
        EXPECT_EQ(run({cmd, "--verify"}, "1121332211322").code, 0) << cmd;
    }
    EXPECT_EQ(run({"mas", "--engine", "skeleton", "--verify"}, "1121332211322").code, 0);
    EXPECT_EQ(run({"mas", "--count", "--verify"}, "1121332211322").code, 0);
    const auto big = run({"sas", "--count", "--verify"}, std::string(100, '1') + "2");
    EXPECT_EQ(big.code, 0);
    EXPECT_NE(big.err.find("verify skipped"), std::string::npos);
}

namespace {

void expect_replay_roundtrip(const std::vector<std::string>& enumerate, const std::string& word, const std::vector<std::string>& global = {}) {
    auto plain_args = global;
    plain_args.insert(plain_args.end(), enumerate.begin(), enumerate.end());
    auto inc_args = plain_args;
    inc_args.push_back("--incremental");
    auto replay_args = global;
    replay_args.push_back("replay");
    const auto plain = run(plain_args, word);
    const auto records = run(inc_args, word);
    ASSERT_EQ(records.code, 0) << records.err;
    const auto replayed = run(replay_args, records.out);
    ASSERT_EQ(replayed.code, 0) << replayed.err;
    EXPECT_EQ(replayed.out, plain.out);
}

}  // namespace

TEST(Cli, IncrementalReplayIsByteIdentical) {
    for (const char* w : {"1121332211322", "1223313", "11211111", "1", "abcabcab"}) {
        expect_replay_roundtrip({"sas"}, w);
        expect_replay_roundtrip({"mas"}, w);
        expect_replay_roundtrip({"mas", "--engine", "skeleton"}, w);
    }
    expect_replay_roundtrip({"mas"}, "10 3 10 3 3 7", {"--alphabet", "ints"});
    expect_replay_roundtrip({"sas"}, "10 3 10 3 3 7", {"--alphabet", "ints"});
    std::mt19937_64 rng(3);
    for (int it = 0; it < 30; ++it) {
        std::string w;
        for (int t = 0, n = 1 + static_cast<int>(rng() % 30); t < n; ++t) w.push_back(static_cast<char>('a' + rng() % 4));
        expect_replay_roundtrip({"mas"}, w);
        expect_replay_roundtrip({"sas"}, w);
    }
}

TEST(Cli, StructuredRecords) {
    const auto r = run({"mas", "--incremental"}, "11211111");
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "v=1");
    std::getline(lines, line);
    const auto header = nlohmann::json::parse(line);
    EXPECT_EQ(header["type"], "header");
    EXPECT_EQ(header["kind"], "mas");
    EXPECT_EQ(header["engine"], "direct");
    std::getline(lines, line);
    EXPECT_EQ(nlohmann::json::parse(line)["type"], "init");
    std::size_t edits = 0;
    while (std::getline(lines, line)) {
        const auto rec = nlohmann::json::parse(line);
        EXPECT_EQ(rec["type"], "edit");
        EXPECT_LE(rec["append"].size(), 4u);
        ++edits;
    }
    EXPECT_EQ(edits, 3u);
    EXPECT_EQ(run({"--format", "structured", "sas", "--count"}, "1223313").out, "{\"type\":\"count\",\"value\":\"1\"}\n");
}

TEST(Cli, ReplayRejectsMalformedEdits) {
    const std::string header = "v=1\n" + run({"mas", "--incremental"}, "11211111").out.substr(4, std::string::npos);
    const auto head = header.substr(0, header.find('\n', 4) + 1);
    EXPECT_EQ(run({"replay"}, head + "{\"type\":\"init\",\"letters\":[1,2]}\n{\"type\":\"edit\",\"keep\":5,\"append\":[]}\n").code, 2);
    EXPECT_EQ(run({"replay"}, head + "{\"type\":\"init\",\"letters\":[1,2]}\n{\"type\":\"edit\",\"keep\":0,\"append\":[{\"edge\":[[0,0],[99,0]]}]}\n").code, 2);
    EXPECT_EQ(run({"replay"}, head + "{\"type\":\"init\",\"letters\":[7]}\n").code, 2);
}

TEST(Cli, ReadsWordFromFile) {
    const auto path = ::testing::TempDir() + "absent_cli_word.txt";
    {
        std::ofstream f(path);
        f << "1223313\n";
    }
    EXPECT_EQ(run({"sas", path}, "").out, "32\n");
    EXPECT_EQ(run({"sas", ::testing::TempDir() + "missing-file"}, "").code, 2);
}
