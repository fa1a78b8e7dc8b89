#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absent/core.hpp"

namespace absent {

enum class AlphabetMode { Bytes, Ints };

/// A non-empty word over the integer alphabet [1:sigma], where sigma is the
/// number of distinct symbols of the input. Symbols are numbered by first
/// occurrence, so w[1] is always letter 1.
///
/// Indexing is 1-based: w[1..size()]. The original symbols are kept for
/// rendering results back in the caller's alphabet.
class Word {
public:
    Word() = default;

    /// Builds a word from already-numeric letters, remapping them by first
    /// occurrence. Symbols render as the original numbers.
    static Word from_letters(std::span<const Letter> raw) {
        if (raw.empty()) throw Error(ErrorCode::EmptyInput, "word must be non-empty");
        Word w;
        w.mode_ = AlphabetMode::Ints;
        w.letters_.reserve(raw.size() + 1);
        w.letters_.push_back(0);
        std::unordered_map<Letter, Letter> remap;
        for (Letter x : raw) {
            if (x == 0) throw Error(ErrorCode::InvalidSymbol, "letters must be positive");
            auto [it, fresh] = remap.try_emplace(x, static_cast<Letter>(remap.size() + 1));
            if (fresh) w.symbols_.push_back(std::to_string(x));
            w.letters_.push_back(it->second);
        }
        w.index_symbols();
        return w;
    }

    static Word from_letters(std::initializer_list<Letter> raw) {
        return from_letters(std::span<const Letter>(raw.begin(), raw.size()));
    }

    /// Convenience for fixtures written as digit strings, e.g. "1121332211322".
    static Word from_digits(std::string_view digits) {
        std::vector<Letter> raw;
        for (char c : digits) {
            if (c < '1' || c > '9') throw Error(ErrorCode::InvalidSymbol, "expected digits 1-9");
            raw.push_back(static_cast<Letter>(c - '0'));
        }
        Word w = from_letters(raw);
        w.mode_ = AlphabetMode::Bytes;
        return w;
    }

    Pos size() const noexcept { return static_cast<Pos>(letters_.size()) - 1; }
    Letter sigma() const noexcept { return static_cast<Letter>(symbols_.size()); }
    AlphabetMode mode() const noexcept { return mode_; }

    Letter operator[](Pos i) const { return letters_[static_cast<std::size_t>(i)]; }

    /// Letters w[1..n] as a span (no padding).
    std::span<const Letter> letters() const { return {letters_.data() + 1, letters_.size() - 1}; }

    const std::vector<std::string>& symbols() const noexcept { return symbols_; }
    const std::string& symbol(Letter a) const { return symbols_.at(a - 1); }

    /// Renders a string over this word's alphabet in the original symbols.
    std::string render(std::span<const Letter> v) const {
        std::string out;
        for (std::size_t t = 0; t < v.size(); ++t) {
            if (mode_ == AlphabetMode::Ints && t > 0) out.push_back(' ');
            out += symbol(v[t]);
        }
        return out;
    }

    /// Maps external symbols onto this word's letters. Symbols that do not
    /// occur in the word are an AlphabetMismatch.
    std::vector<Letter> encode(std::string_view raw) const;

    friend Word build_word(std::string_view raw, AlphabetMode mode);

private:
    void index_symbols() {
        lookup_.clear();
        for (std::size_t a = 0; a < symbols_.size(); ++a)
            lookup_.emplace(symbols_[a], static_cast<Letter>(a + 1));
    }

    std::vector<Letter> letters_;
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Letter> lookup_;
    AlphabetMode mode_ = AlphabetMode::Bytes;
};

namespace detail {

inline std::vector<std::string> split_symbols(std::string_view raw, AlphabetMode mode) {
    std::vector<std::string> out;
    if (mode == AlphabetMode::Bytes) {
        out.reserve(raw.size());
        for (char c : raw) out.emplace_back(1, c);
        return out;
    }
    std::size_t i = 0;
    while (i < raw.size()) {
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (i == raw.size()) break;
        std::size_t j = i;
        while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
        std::string_view tok = raw.substr(i, j - i);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || value == 0)
            throw Error(ErrorCode::InvalidSymbol, "not a positive integer: '" + std::string(tok) + "'");
        out.push_back(std::to_string(value));
        i = j;
    }
    return out;
}

}  // namespace detail

/// Builds a word from raw input. In bytes mode every byte is a symbol; in ints
/// mode the input is whitespace-separated positive integers.
inline Word build_word(std::string_view raw, AlphabetMode mode) {
    auto symbols = detail::split_symbols(raw, mode);
    if (symbols.empty()) throw Error(ErrorCode::EmptyInput, "word must be non-empty");
    Word w;
    w.mode_ = mode;
    w.letters_.reserve(symbols.size() + 1);
    w.letters_.push_back(0);
    for (auto& s : symbols) {
        auto [it, fresh] = w.lookup_.try_emplace(s, static_cast<Letter>(w.symbols_.size() + 1));
        if (fresh) w.symbols_.push_back(s);
        w.letters_.push_back(it->second);
    }
    return w;
}

inline std::vector<Letter> Word::encode(std::string_view raw) const {
    std::vector<Letter> v;
    for (auto& s : detail::split_symbols(raw, mode_)) {
        auto it = lookup_.find(s);
        if (it == lookup_.end())
            throw Error(ErrorCode::AlphabetMismatch, "symbol '" + s + "' does not occur in the word");
        v.push_back(it->second);
    }
    return v;
}

}  // namespace absent
