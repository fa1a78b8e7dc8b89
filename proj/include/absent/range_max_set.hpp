#pragma once

#include <algorithm>
#include <cstdlib>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "absent/core.hpp"

namespace absent {

enum class SetStatus { Ok, DuplicateKey, CapacityExceeded, NotFound };

/// Balanced search tree over (key, value) pairs with a bounded number of
/// live entries. range_max returns the entry with the largest value among
/// keys in [x:y], preferring the smallest key on ties.
class RangeMaxSet {
public:
    struct Entry {
        Pos key;
        Pos value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    explicit RangeMaxSet(std::size_t capacity) : capacity_(capacity) { nodes_.reserve(capacity); }

    std::size_t size() const noexcept { return size_; }
    std::size_t capacity() const noexcept { return capacity_; }

    SetStatus insert(Pos key, Pos value) {
        if (find(key) != kNil) return SetStatus::DuplicateKey;
        if (size_ == capacity_) return SetStatus::CapacityExceeded;
        root_ = insert_at(root_, key, value);
        ++size_;
        return SetStatus::Ok;
    }

    SetStatus erase(Pos key) {
        if (find(key) == kNil) return SetStatus::NotFound;
        root_ = erase_at(root_, key);
        --size_;
        return SetStatus::Ok;
    }

    std::optional<Entry> range_max(Pos x, Pos y) const {
        std::int32_t v = root_;
        while (v != kNil && (key(v) < x || key(v) > y)) v = key(v) < x ? node(v).right : node(v).left;
        if (v == kNil) return std::nullopt;
        Entry best = self(v);
        for (std::int32_t u = node(v).left; u != kNil;) {
            if (key(u) >= x) {
                best = better(best, self(u));
                if (node(u).right != kNil) best = better(best, node(node(u).right).best);
                u = node(u).left;
            } else {
                u = node(u).right;
            }
        }
        for (std::int32_t u = node(v).right; u != kNil;) {
            if (key(u) <= y) {
                best = better(best, self(u));
                if (node(u).left != kNil) best = better(best, node(node(u).left).best);
                u = node(u).right;
            } else {
                u = node(u).left;
            }
        }
        return best;
    }

    /// Height balance, key order and aggregates all hold.
    bool check_invariants() const {
        std::size_t count = 0;
        return check(root_, nullptr, nullptr, count) >= 0 && count == size_;
    }

private:
    static constexpr std::int32_t kNil = -1;

    struct TreeNode {
        Entry entry;
        Entry best;
        std::int32_t left = kNil, right = kNil;
        std::int32_t height = 1;
    };

    static Entry better(const Entry& a, const Entry& b) {
        if (a.value != b.value) return a.value > b.value ? a : b;
        return a.key < b.key ? a : b;
    }

    TreeNode& node(std::int32_t v) { return nodes_[static_cast<std::size_t>(v)]; }
    const TreeNode& node(std::int32_t v) const { return nodes_[static_cast<std::size_t>(v)]; }
    Pos key(std::int32_t v) const { return node(v).entry.key; }
    Entry self(std::int32_t v) const { return node(v).entry; }
    std::int32_t height(std::int32_t v) const { return v == kNil ? 0 : node(v).height; }

    std::int32_t find(Pos k) const {
        std::int32_t v = root_;
        while (v != kNil && key(v) != k) v = k < key(v) ? node(v).left : node(v).right;
        return v;
    }

    void pull(std::int32_t v) {
        auto& t = node(v);
        t.height = 1 + std::max(height(t.left), height(t.right));
        t.best = t.entry;
        if (t.left != kNil) t.best = better(t.best, node(t.left).best);
        if (t.right != kNil) t.best = better(t.best, node(t.right).best);
    }

    std::int32_t rotate_right(std::int32_t v) {
        const std::int32_t l = node(v).left;
        node(v).left = node(l).right;
        node(l).right = v;
        pull(v);
        pull(l);
        return l;
    }

    std::int32_t rotate_left(std::int32_t v) {
        const std::int32_t r = node(v).right;
        node(v).right = node(r).left;
        node(r).left = v;
        pull(v);
        pull(r);
        return r;
    }

    std::int32_t rebalance(std::int32_t v) {
        pull(v);
        const std::int32_t bal = height(node(v).left) - height(node(v).right);
        if (bal > 1) {
            if (height(node(node(v).left).left) < height(node(node(v).left).right)) node(v).left = rotate_left(node(v).left);
            return rotate_right(v);
        }
        if (bal < -1) {
            if (height(node(node(v).right).right) < height(node(node(v).right).left)) node(v).right = rotate_right(node(v).right);
            return rotate_left(v);
        }
        return v;
    }

    std::int32_t allocate(Pos k, Pos value) {
        const TreeNode t{{k, value}, {k, value}, kNil, kNil, 1};
        if (free_ != kNil) {
            const std::int32_t v = free_;
            free_ = node(v).left;
            node(v) = t;
            return v;
        }
        nodes_.push_back(t);
        return static_cast<std::int32_t>(nodes_.size() - 1);
    }

    void release(std::int32_t v) {
        node(v).left = free_;
        free_ = v;
    }

    std::int32_t insert_at(std::int32_t v, Pos k, Pos value) {
        if (v == kNil) return allocate(k, value);
        if (k < key(v)) node(v).left = insert_at(node(v).left, k, value);
        else node(v).right = insert_at(node(v).right, k, value);
        return rebalance(v);
    }

    std::int32_t erase_min(std::int32_t v, std::int32_t& min_node) {
        if (node(v).left == kNil) {
            min_node = v;
            return node(v).right;
        }
        node(v).left = erase_min(node(v).left, min_node);
        return rebalance(v);
    }

    std::int32_t erase_at(std::int32_t v, Pos k) {
        if (k < key(v)) {
            node(v).left = erase_at(node(v).left, k);
        } else if (k > key(v)) {
            node(v).right = erase_at(node(v).right, k);
        } else {
            const std::int32_t l = node(v).left, r = node(v).right;
            release(v);
            if (r == kNil) return l;
            std::int32_t m = kNil;
            const std::int32_t rest = erase_min(r, m);
            node(m).left = l;
            node(m).right = rest;
            return rebalance(m);
        }
        return rebalance(v);
    }

    std::int32_t check(std::int32_t v, const Pos* lo, const Pos* hi, std::size_t& count) const {
        if (v == kNil) return 0;
        ++count;
        const auto& t = node(v);
        if ((lo && t.entry.key <= *lo) || (hi && t.entry.key >= *hi)) return -1;
        const std::int32_t hl = check(t.left, lo, &t.entry.key, count);
        const std::int32_t hr = check(t.right, &t.entry.key, hi, count);
        if (hl < 0 || hr < 0 || std::abs(hl - hr) > 1 || t.height != 1 + std::max(hl, hr)) return -1;
        Entry b = t.entry;
        if (t.left != kNil) b = better(b, node(t.left).best);
        if (t.right != kNil) b = better(b, node(t.right).best);
        return b == t.best ? t.height : -1;
    }

    std::size_t capacity_;
    std::vector<TreeNode> nodes_;
    std::int32_t root_ = kNil;
    std::int32_t free_ = kNil;
    std::size_t size_ = 0;
};

}  // namespace absent
