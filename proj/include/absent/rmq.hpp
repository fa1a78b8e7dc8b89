#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "absent/core.hpp"

namespace absent {

/// Static range-maximum index over a 1-based array, O(n) build and O(1) query.
///
/// Blocks of 32 positions answer in-block queries through a per-position bit
/// mask of the monotone stack (leftmost maximum wins); a sparse table over the
/// block maxima answers the span of whole blocks.
class RangeMaxIndex {
public:
    RangeMaxIndex() = default;

    /// values[0] is ignored; positions are 1..values.size()-1.
    explicit RangeMaxIndex(std::span<const Pos> values) : vals_(values.begin(), values.end()) {
        n_ = static_cast<Pos>(vals_.size()) - 1;
        if (n_ <= 0) return;
        build_masks();
        build_blocks();
    }

    Pos size() const noexcept { return n_; }

    /// Smallest position in [i:j] holding the maximum value, or kNoPos if i > j.
    Pos query(Pos i, Pos j) const {
        if (i > j) return kNoPos;
        const Pos bi = block_of(i), bj = block_of(j);
        if (bi == bj) return in_block(i, j);
        Pos best = in_block(i, block_end(bi));
        if (bi + 1 <= bj - 1) best = better(best, block_range(bi + 1, bj - 1));
        return better(best, in_block(block_begin(bj), j));
    }

    Pos value(Pos i) const { return vals_[static_cast<std::size_t>(i)]; }

private:
    static constexpr Pos kBlock = 32;

    Pos block_of(Pos i) const { return (i - 1) / kBlock; }
    Pos block_begin(Pos b) const { return b * kBlock + 1; }
    Pos block_end(Pos b) const { return std::min(n_, (b + 1) * kBlock); }

    // Leftmost maximum: ties keep the smaller position.
    Pos better(Pos a, Pos b) const {
        if (a == kNoPos) return b;
        if (b == kNoPos) return a;
        const Pos va = value(a), vb = value(b);
        if (va != vb) return va > vb ? a : b;
        return std::min(a, b);
    }

    void build_masks() {
        masks_.assign(static_cast<std::size_t>(n_) + 1, 0);
        std::uint32_t stack = 0;
        for (Pos i = 1; i <= n_; ++i) {
            const Pos off = (i - 1) % kBlock;
            if (off == 0) stack = 0;
            // Pop strictly smaller values so equal values keep their older position.
            while (stack != 0) {
                const Pos top = 31 - std::countl_zero(stack);
                const Pos p = i - off + top;
                if (value(p) >= value(i)) break;
                stack &= ~(std::uint32_t{1} << top);
            }
            stack |= std::uint32_t{1} << off;
            masks_[static_cast<std::size_t>(i)] = stack;
        }
    }

    Pos in_block(Pos i, Pos j) const {
        const Pos base = block_begin(block_of(i));
        const std::uint32_t m = masks_[static_cast<std::size_t>(j)] & (~std::uint32_t{0} << (i - base));
        return base + std::countr_zero(m);
    }

    // Packs (value, position) so that a larger key is a larger value or, on
    // ties, a smaller position.
    static std::uint64_t key(Pos value, Pos pos) {
        const auto v = static_cast<std::uint32_t>(value) ^ 0x80000000u;
        return (std::uint64_t{v} << 32) | (0xFFFFFFFFu - static_cast<std::uint32_t>(pos));
    }
    static Pos pos_of(std::uint64_t k) { return static_cast<Pos>(0xFFFFFFFFu - static_cast<std::uint32_t>(k)); }

    void build_blocks() {
        const Pos blocks = block_of(n_) + 1;
        table_.emplace_back(static_cast<std::size_t>(blocks));
        for (Pos b = 0; b < blocks; ++b) {
            const Pos p = in_block(block_begin(b), block_end(b));
            table_[0][static_cast<std::size_t>(b)] = key(value(p), p);
        }
        for (Pos k = 1; (Pos{1} << k) <= blocks; ++k) {
            const auto& prev = table_[static_cast<std::size_t>(k - 1)];
            std::vector<std::uint64_t> row(static_cast<std::size_t>(blocks - (Pos{1} << k) + 1));
            for (std::size_t b = 0; b < row.size(); ++b) row[b] = std::max(prev[b], prev[b + (std::size_t{1} << (k - 1))]);
            table_.push_back(std::move(row));
        }
    }

    Pos block_range(Pos a, Pos b) const {
        const int k = std::bit_width(static_cast<std::uint32_t>(b - a + 1)) - 1;
        const auto& row = table_[static_cast<std::size_t>(k)];
        return pos_of(std::max(row[static_cast<std::size_t>(a)], row[static_cast<std::size_t>(b - (Pos{1} << k) + 1)]));
    }

    std::vector<Pos> vals_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::vector<std::uint64_t>> table_;
    Pos n_ = 0;
};

}  // namespace absent
