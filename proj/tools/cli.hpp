#pragma once

#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "absent/absent.hpp"
#include "absent/oracle.hpp"

namespace absent::cli {

enum Exit : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kVerifyMismatch = 3 };

using json = nlohmann::json;

struct Options {
    std::string alphabet = "bytes";
    std::string format = "text";
    bool verify = false;
    std::string input;

    std::string kind;
    std::string pattern;
    bool count = false;
    std::optional<std::uint64_t> limit;
    bool incremental = false;
    std::string engine;
    bool length_only = false;
};

class VerifyMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline AlphabetMode mode_of(const std::string& s) { return s == "ints" ? AlphabetMode::Ints : AlphabetMode::Bytes; }

inline std::string read_all(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), {}};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::EmptyInput, "cannot open " + path);
    return {std::istreambuf_iterator<char>(f), {}};
}

inline std::string strip_newline(std::string s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

// Symbols travel as numbers: byte values in bytes mode, the integers themselves in ints mode.
inline json symbols_json(const Word& w) {
    json out = json::array();
    for (const auto& s : w.symbols()) {
        if (w.mode() == AlphabetMode::Bytes) out.push_back(static_cast<unsigned char>(s[0]));
        else out.push_back(std::stoull(s));
    }
    return out;
}

inline Word word_from_header(const json& h) {
    const auto mode = mode_of(h.at("alphabet").get<std::string>());
    const auto& symbols = h.at("symbols");
    std::string raw;
    for (const auto& a : h.at("word")) {
        const auto letter = a.get<std::size_t>();
        if (letter == 0 || letter > symbols.size()) throw Error(ErrorCode::MalformedRecord, "letter out of range in header");
        const auto& s = symbols[letter - 1];
        if (mode == AlphabetMode::Bytes) {
            raw.push_back(static_cast<char>(s.get<unsigned>()));
        } else {
            if (!raw.empty()) raw.push_back(' ');
            raw += std::to_string(s.get<std::uint64_t>());
        }
    }
    return build_word(raw, mode);
}

inline void expect(bool ok, const std::string& what) {
    if (!ok) throw VerifyMismatch(what);
}

/// Runs an oracle comparison; inputs past the oracle guards are reported and skipped.
template <class F>
void verify_with(std::ostream& err, F&& check) {
    try {
        check();
    } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge) throw;
        err << "verify skipped: " << e.what() << '\n';
    }
}

/// No duplicates, nothing the oracle rejects, and complete unless cut by a limit.
inline void verify_stream(const std::vector<std::vector<Letter>>& got, const oracle::WordSet& want, std::optional<std::uint64_t> limit) {
    const std::set<std::vector<Letter>> seen(got.begin(), got.end());
    expect(seen.size() == got.size(), "stream contains duplicates");
    for (const auto& v : seen) expect(want.count(v) == 1, "stream contains an element the oracle rejects");
    const auto expected = limit ? std::min<std::size_t>(*limit, want.size()) : want.size();
    expect(got.size() == expected,
           "stream has " + std::to_string(got.size()) + " elements, oracle expects " + std::to_string(expected));
}

/// Writes results as plain lines or as versioned JSON records.
class Sink {
public:
    Sink(std::ostream& out, const Word& w, bool structured) : out_(out), w_(w), structured_(structured) {}

    bool structured() const noexcept { return structured_; }

    void header(const std::string& kind, const std::string& engine) {
        if (!structured_) return;
        out_ << "v=1\n";
        record({{"type", "header"},
                {"kind", kind},
                {"engine", engine},
                {"alphabet", w_.mode() == AlphabetMode::Bytes ? "bytes" : "ints"},
                {"symbols", symbols_json(w_)},
                {"word", w_.letters()}});
    }

    void word(std::span<const Letter> v) {
        if (structured_) record({{"type", "word"}, {"letters", v}});
        else out_ << w_.render(v) << '\n';
    }

    void value(const std::string& type, const json& v, const std::string& text) {
        if (structured_) record({{"type", type}, {"value", v}});
        else out_ << text << '\n';
    }

    void text(const std::string& line) { out_ << line << '\n'; }
    void record(const json& j) { out_ << j.dump() << '\n'; }

private:
    std::ostream& out_;
    const Word& w_;
    bool structured_;
};

template <class Script, class NodeJson>
json script_json(const Script& sc, NodeJson&& node_json) {
    json append = json::array();
    for (const auto& seg : sc) {
        switch (seg.kind) {
            case SegmentKind::Edge: append.push_back({{"edge", {node_json(seg.from), node_json(seg.to)}}}); break;
            case SegmentKind::DefaultPath: append.push_back({{"path", {node_json(seg.from), node_json(seg.to)}}}); break;
            case SegmentKind::FinalLetter: append.push_back({{"final", seg.letter}}); break;
        }
    }
    return {{"type", "edit"}, {"keep", sc.keep}, {"append", append}};
}

template <class Script, class NodeOf>
Script script_from_json(const json& rec, NodeOf&& node_of) {
    Script sc;
    sc.reset(rec.at("keep").get<Pos>());
    const auto& append = rec.at("append");
    if (!append.is_array() || append.size() > Script::kMaxSegments) throw Error(ErrorCode::MalformedRecord, "bad segment list");
    for (const auto& seg : append) {
        if (seg.contains("edge")) sc.edge(node_of(seg["edge"].at(0)), node_of(seg["edge"].at(1)));
        else if (seg.contains("path")) sc.path(node_of(seg["path"].at(0)), node_of(seg["path"].at(1)));
        else if (seg.contains("final")) sc.final_letter(seg["final"].get<Letter>());
        else throw Error(ErrorCode::MalformedRecord, "unknown segment " + seg.dump());
    }
    return sc;
}

/// Drives an incremental enumerator: the first result goes out whole, every
/// later one as its edit script. Returns the replayed stream when verifying.
template <class Enumerator, class NodeJson, class Replay>
std::vector<std::vector<Letter>> run_incremental(Enumerator& e, Sink& sink, const Options& opt, NodeJson&& node_json, Replay&& replay) {
    std::vector<std::vector<Letter>> got;
    std::vector<Letter> cur;
    std::uint64_t produced = 0;
    while ((!opt.limit || produced < *opt.limit) && e.next()) {
        if (produced++ == 0) {
            cur = e.current();
            sink.record({{"type", "init"}, {"letters", cur}});
        } else {
            sink.record(script_json(e.script(), node_json));
            if (opt.verify) replay(e.script(), cur);
        }
        if (opt.verify) got.push_back(cur);
    }
    return got;
}

template <class Enumerator>
std::vector<std::vector<Letter>> run_explicit(Enumerator& e, Sink& sink, const Options& opt) {
    std::vector<std::vector<Letter>> got;
    std::uint64_t produced = 0;
    while ((!opt.limit || produced < *opt.limit) && e.next()) {
        ++produced;
        const auto& v = e.current();
        sink.word(v);
        if (opt.verify) got.emplace_back(v.begin(), v.end());
    }
    return got;
}

inline json skeleton_node(Node v) { return v; }
inline json direct_node(MasNode v) { return json::array({v.i, v.j}); }

inline int cmd_arches(const WordIndex& idx, Sink& sink, const Options& opt, std::ostream& err, bool show_arches) {
    const auto& w = idx.word();
    const auto& fac = idx.arches();
    const auto letters = w.letters();
    std::vector<std::vector<Letter>> parts;
    Pos begin = 1;
    for (Pos end : fac.arch_ends) {
        parts.emplace_back(letters.begin() + (begin - 1), letters.begin() + end);
        begin = end + 1;
    }
    const std::vector<Letter> rest(letters.begin() + (fac.rest_start - 1), letters.end());
    if (show_arches) {
        if (sink.structured()) {
            sink.record({{"type", "arches"}, {"arches", parts}, {"rest", rest}});
        } else {
            std::string line;
            for (std::size_t t = 0; t < parts.size(); ++t) line += (t ? "|" : "") + w.render(parts[t]);
            if (!rest.empty()) line += (parts.empty() ? "" : "|") + w.render(rest);
            sink.text(line);
        }
    }
    sink.value("iota", fac.iota, "iota=" + std::to_string(fac.iota));
    if (opt.verify) {
        verify_with(err, [&] {
            const auto sas = oracle::brute_sas(w);
            expect(sas.begin()->size() == static_cast<std::size_t>(fac.iota) + 1, "iota disagrees with the oracle");
        });
    }
    return kOk;
}

inline int cmd_check(const WordIndex& idx, Sink& sink, const Options& opt, std::ostream& err) {
    const auto& w = idx.word();
    const auto v = w.encode(opt.pattern);
    bool result = false;
    if (opt.kind == "subsequence") result = is_subsequence(v, idx);
    else if (opt.kind == "sas") result = is_sas(v, idx);
    else if (opt.kind == "mas") result = is_mas(v, idx);
    else result = is_mas_prefix(v, idx);
    sink.value("check", result, result ? "true" : "false");
    if (opt.verify) {
        verify_with(err, [&] {
            bool want = false;
            if (opt.kind == "subsequence") {
                want = oracle::naive_is_subsequence(v, w);
            } else if (opt.kind == "sas") {
                want = oracle::brute_sas(w).count(v) == 1;
            } else if (opt.kind == "mas") {
                want = oracle::brute_mas(w).count(v) == 1;
            } else {
                for (const auto& m : oracle::brute_mas(w))
                    want |= !v.empty() && v.size() < m.size() && std::equal(v.begin(), v.end(), m.begin());
            }
            expect(result == want, "check result disagrees with the oracle");
        });
    }
    return kOk;
}

inline int cmd_sas(const WordIndex& idx, Sink& sink, const Options& opt, std::ostream& err) {
    const auto& w = idx.word();
    const auto sk = build_sas_skeleton(idx);
    if (opt.count) {
        const auto c = count_paths(sk.dag());
        sink.value("count", c.str(), c.str());
        if (opt.verify) verify_with(err, [&] { expect(c == oracle::brute_sas(w).size(), "count disagrees with the oracle"); });
        return kOk;
    }
    sink.header("sas", "skeleton");
    SasEnumerator e(sk);
    const auto got = opt.incremental
        ? run_incremental(e, sink, opt, skeleton_node,
                          [&](const EditScript<Node>& sc, std::vector<Letter>& cur) { apply_script_letters(sk, sc, cur); })
        : run_explicit(e, sink, opt);
    if (opt.verify) verify_with(err, [&] { verify_stream(got, oracle::brute_sas(w), opt.limit); });
    return kOk;
}

inline int cmd_mas(const WordIndex& idx, Sink& sink, const Options& opt, std::ostream& err) {
    const auto& w = idx.word();
    const std::string engine = opt.engine.empty() ? "direct" : opt.engine;
    if (opt.count) {
        const auto c = count_mas(idx);
        sink.value("count", c.str(), c.str());
        if (opt.verify) verify_with(err, [&] { expect(c == oracle::brute_mas(w).size(), "count disagrees with the oracle"); });
        return kOk;
    }
    sink.header("mas", engine);
    std::vector<std::vector<Letter>> got;
    if (engine == "skeleton") {
        const auto sk = build_mas_skeleton(idx);
        MasSkeletonEnumerator e(sk);
        got = opt.incremental
            ? run_incremental(e, sink, opt, skeleton_node,
                              [&](const EditScript<Node>& sc, std::vector<Letter>& cur) { apply_script_letters(sk, sc, cur); })
            : run_explicit(e, sink, opt);
    } else if (opt.incremental) {
        MasIncrementalEnumerator e(idx);
        got = run_incremental(e, sink, opt, direct_node,
                              [&](const EditScript<MasNode>& sc, std::vector<Letter>& cur) { apply_mas_script(idx, sc, cur); });
    } else {
        MasDfsEnumerator e(idx);
        got = run_explicit(e, sink, opt);
    }
    if (opt.verify) verify_with(err, [&] { verify_stream(got, oracle::brute_mas(w), opt.limit); });
    return kOk;
}

inline int cmd_longest(const WordIndex& idx, Sink& sink, const Options& opt, std::ostream& err) {
    const auto v = longest_mas(idx);
    const auto len = static_cast<Pos>(v.size());
    if (opt.length_only) sink.value("length", len, std::to_string(len));
    else sink.word(v);
    if (opt.verify) {
        expect(is_mas(v, idx), "result is not an MAS");
        verify_with(err, [&] { expect(len == oracle::brute_longest_mas(idx.word()), "length disagrees with the oracle"); });
    }
    return kOk;
}

/// Letter-level replay state for one structured stream.
class Replayer {
public:
    explicit Replayer(const json& header)
        : idx_(build_index(word_from_header(header))),
          kind_(header.at("kind").get<std::string>()),
          engine_(header.at("engine").get<std::string>()) {
        if (kind_ == "sas") sas_.emplace(build_sas_skeleton(idx_));
        else if (kind_ == "mas" && engine_ == "skeleton") mas_.emplace(build_mas_skeleton(idx_));
        else if (kind_ != "mas" || engine_ != "direct") throw Error(ErrorCode::MalformedRecord, "unsupported stream " + kind_ + "/" + engine_);
    }

    const Word& word() const { return idx_.word(); }

    void init(const json& letters) {
        cur_ = letters.get<std::vector<Letter>>();
        check_letters();
    }

    void edit(const json& rec) {
        if (sas_ || mas_) {
            const auto& g = sas_ ? sas_->dag() : mas_->dag();
            auto node_of = [&](const json& j) {
                const auto v = j.get<Node>();
                if (v < 0 || v >= g.node_count()) throw Error(ErrorCode::MalformedRecord, "node out of range");
                return v;
            };
            const auto sc = script_from_json<EditScript<Node>>(rec, node_of);
            check_keep(sc.keep);
            for (const auto& seg : sc) {
                if (seg.kind == SegmentKind::Edge && !g.has_edge(seg.from, seg.to)) throw Error(ErrorCode::MalformedRecord, "not an edge");
                if (seg.kind == SegmentKind::DefaultPath && !reaches(g, seg.from, seg.to)) throw Error(ErrorCode::MalformedRecord, "not a default path");
            }
            if (sas_) apply_script_letters(*sas_, sc, cur_);
            else apply_script_letters(*mas_, sc, cur_);
        } else {
            const Pos n = idx_.n();
            auto node_of = [&](const json& j) {
                MasNode v{j.at(0).get<Pos>(), j.at(1).get<Pos>()};
                if (v.i < 0 || v.i > n + 1 || v.j < 0 || v.j > n) throw Error(ErrorCode::MalformedRecord, "node out of range");
                return v;
            };
            const auto sc = script_from_json<EditScript<MasNode>>(rec, node_of);
            check_keep(sc.keep);
            for (const auto& seg : sc) {
                if (seg.kind == SegmentKind::Edge && (seg.to.i < 1 || seg.to.i > n)) throw Error(ErrorCode::MalformedRecord, "edge leaves the word");
                if (seg.kind == SegmentKind::DefaultPath &&
                    (seg.from.i < 1 || seg.to.i > n || seg.from.i > seg.to.i || idx_[seg.from.i] != idx_[seg.to.i]))
                    throw Error(ErrorCode::MalformedRecord, "not a default path");
            }
            apply_mas_script(idx_, sc, cur_);
        }
        check_letters();
    }

    const std::vector<Letter>& current() const noexcept { return cur_; }

private:
    static bool reaches(const SkeletonDag& g, Node a, Node b) {
        while (a != b && a != g.sink()) a = g.down(a);
        return a == b;
    }

    void check_keep(Pos keep) const {
        if (keep < 0 || static_cast<std::size_t>(keep) > cur_.size()) throw Error(ErrorCode::MalformedRecord, "keep exceeds the current word");
    }

    void check_letters() const {
        for (Letter a : cur_)
            if (a == 0 || a > idx_.sigma()) throw Error(ErrorCode::MalformedRecord, "letter out of range");
    }

    WordIndex idx_;
    std::string kind_, engine_;
    std::optional<SasSkeleton> sas_;
    std::optional<MasSkeleton> mas_;
    std::vector<Letter> cur_;
};

inline int cmd_replay(const std::string& text, std::ostream& out) {
    std::istringstream lines(text);
    std::string line;
    if (!std::getline(lines, line) || strip_newline(line) != "v=1") throw Error(ErrorCode::MalformedRecord, "missing v=1 header line");
    std::optional<Replayer> r;
    std::size_t lineno = 1;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec;
        try {
            rec = json::parse(line);
            const auto type = rec.at("type").get<std::string>();
            if (type == "header") {
                r.emplace(rec);
                continue;
            }
            if (!r) throw Error(ErrorCode::MalformedRecord, "record before header");
            if (type == "init") r->init(rec.at("letters"));
            else if (type == "edit") r->edit(rec);
            else if (type == "word") r->init(rec.at("letters"));
            else throw Error(ErrorCode::MalformedRecord, "unknown record type " + type);
            out << r->word().render(r->current()) << '\n';
        } catch (const json::exception& e) {
            throw Error(ErrorCode::MalformedRecord, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return kOk;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Shortest and minimal absent subsequences of a word"};
    app.name("absent");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--alphabet", opt.alphabet, "bytes: one letter per byte; ints: whitespace-separated positive integers")
        ->check(CLI::IsMember({"bytes", "ints"}));
    app.add_option("--format", opt.format, "text or structured (line-delimited JSON)")->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--verify", opt.verify, "cross-check the result against the brute-force oracle");

    std::uint64_t limit = 0;
    auto input = [&](CLI::App* sub) { sub->add_option("input", opt.input, "file holding the word (default: stdin)"); };
    auto* arches = app.add_subcommand("arches", "arch factorization and universality index");
    auto* universality = app.add_subcommand("universality", "universality index");
    auto* check = app.add_subcommand("check", "classify a pattern");
    check->add_option("--kind", opt.kind, "which property to test")->required()->check(CLI::IsMember({"subsequence", "sas", "mas", "mas-prefix"}));
    check->add_option("--pattern", opt.pattern, "the candidate string, in the word's alphabet")->required();
    auto* sas = app.add_subcommand("sas", "shortest absent subsequences");
    auto* mas = app.add_subcommand("mas", "minimal absent subsequences");
    for (auto* sub : {sas, mas}) {
        auto* count = sub->add_flag("--count", opt.count, "print only the number of results");
        sub->add_option("--limit", limit, "stop after N results")->excludes(count);
        sub->add_flag("--incremental", opt.incremental, "emit the first result, then edit records")->excludes(count);
    }
    sas->add_option("--engine", opt.engine, "enumeration engine")->check(CLI::IsMember({"skeleton"}));
    mas->add_option("--engine", opt.engine, "enumeration engine (default: direct)")->check(CLI::IsMember({"direct", "skeleton"}));
    auto* longest = app.add_subcommand("longest-mas", "one longest minimal absent subsequence");
    longest->add_flag("--length-only", opt.length_only, "print only the length");
    auto* replay = app.add_subcommand("replay", "expand structured records into plain words");
    for (auto* sub : {arches, universality, check, sas, mas, longest, replay}) input(sub);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    for (auto* sub : {sas, mas})
        if (sub->parsed() && sub->count("--limit")) opt.limit = limit;

    try {
        const std::string raw = detail::strip_newline(detail::read_all(opt.input, in));
        if (replay->parsed()) return detail::cmd_replay(raw, out);
        const auto idx = build_index(build_word(raw, detail::mode_of(opt.alphabet)));
        detail::Sink sink(out, idx.word(), opt.format == "structured" || opt.incremental);
        if (arches->parsed()) return detail::cmd_arches(idx, sink, opt, err, true);
        if (universality->parsed()) return detail::cmd_arches(idx, sink, opt, err, false);
        if (check->parsed()) return detail::cmd_check(idx, sink, opt, err);
        if (sas->parsed()) return detail::cmd_sas(idx, sink, opt, err);
        if (mas->parsed()) return detail::cmd_mas(idx, sink, opt, err);
        return detail::cmd_longest(idx, sink, opt, err);
    } catch (const VerifyMismatch& e) {
        err << "verify mismatch: " << e.what() << '\n';
        return kVerifyMismatch;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kInvalidInput;
    }
}

}  // namespace absent::cli
