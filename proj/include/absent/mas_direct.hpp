#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "absent/edit_script.hpp"
#include "absent/word_index.hpp"

namespace absent {

/// Node (i, j) of the MAS tree: the last two canonical embedding positions of
/// the current MAS-prefix. (0, 0) stands for the root and (n+1, j) for a leaf
/// reached by the final letter.
struct MasNode {
    Pos i = 0;
    Pos j = 0;
    friend bool operator==(const MasNode&, const MasNode&) = default;
};

struct MasChild {
    MasNode node;
    Letter letter = 0;
};

namespace detail {

/// Pool of [x:y] intervals threaded into FIFO queues.
class IntervalQueues {
public:
    struct Queue {
        std::int32_t head = -1;
        std::int32_t tail = -1;
        bool empty() const noexcept { return head < 0; }
    };

    void reserve(std::size_t n) { cells_.reserve(n); }

    void push(Queue& q, Pos x, Pos y) {
        std::int32_t c;
        if (free_ >= 0) {
            c = free_;
            free_ = cells_[static_cast<std::size_t>(c)].next;
            cells_[static_cast<std::size_t>(c)] = {x, y, -1};
        } else {
            c = static_cast<std::int32_t>(cells_.size());
            cells_.push_back({x, y, -1});
        }
        if (q.tail >= 0) cells_[static_cast<std::size_t>(q.tail)].next = c; else q.head = c;
        q.tail = c;
    }

    std::pair<Pos, Pos> pop(Queue& q) {
        const std::int32_t c = q.head;
        auto& cell = cells_[static_cast<std::size_t>(c)];
        q.head = cell.next;
        if (q.head < 0) q.tail = -1;
        cell.next = free_;
        free_ = c;
        return {cell.x, cell.y};
    }

private:
    struct Cell {
        Pos x, y;
        std::int32_t next;
    };
    std::vector<Cell> cells_;
    std::int32_t free_ = -1;
};

inline bool useful_interval(const WordIndex& idx, Pos x, Pos y, Pos beyond) {
    if (x > y) return false;
    return idx.next(idx.range_max_next(x, y)) > beyond;
}

/// Splits [x:y] around its position with the largest next value and queues
/// the halves that still reach past `beyond`. Returns the split position.
inline Pos split_interval(const WordIndex& idx, IntervalQueues& pool, IntervalQueues::Queue& q, Pos x, Pos y, Pos beyond) {
    const Pos g = idx.range_max_next(x, y);
    if (useful_interval(idx, x, g - 1, beyond)) pool.push(q, x, g - 1);
    if (useful_interval(idx, g + 1, y, beyond)) pool.push(q, g + 1, y);
    return g;
}

}  // namespace detail

/// Children of a node in their enumeration order: the default child through
/// w[i] first, then the remaining positions of (j:i) in interval-queue order.
inline std::vector<MasChild> dw_children(const WordIndex& idx, MasNode v) {
    std::vector<MasChild> out;
    const Pos n = idx.n();
    if (v.i > n) return out;
    detail::IntervalQueues pool;
    detail::IntervalQueues::Queue q;
    if (v.i == 0) {
        for (Letter a = 1; a <= idx.sigma(); ++a) out.push_back({{idx.first_occurrence(a), 0}, a});
        return out;
    }
    pool.push(q, v.i, v.i);
    if (detail::useful_interval(idx, v.j + 1, v.i - 1, v.i)) pool.push(q, v.j + 1, v.i - 1);
    while (!q.empty()) {
        const auto [x, y] = pool.pop(q);
        const Pos g = detail::split_interval(idx, pool, q, x, y, v.i);
        out.push_back({{idx.next(g), v.i}, idx[g]});
    }
    return out;
}

/// Depth-first enumeration of all MASs over an explicit stack of frames, each
/// holding its node and the queue of unexplored child intervals.
class MasDfsEnumerator {
public:
    explicit MasDfsEnumerator(const WordIndex& idx) : idx_(&idx) {
        frames_.reserve(static_cast<std::size_t>(idx.n()) + 2);
        pool_.reserve(static_cast<std::size_t>(idx.n()) + 2);
    }

    /// Advances to the next MAS; false once all have been produced.
    bool next() {
        const Pos n = idx_->n();
        if (done_) {
            // Unwind every frame whose queue is exhausted.
            done_ = false;
            while (!frames_.empty() && frames_.back().queue.empty()) frames_.pop_back();
        }
        for (;;) {
            if (frames_.empty()) {
                if (letter_ == idx_->sigma()) return false;
                ++letter_;
                open(idx_->first_occurrence(letter_), 0, letter_);
                continue;
            }
            Frame& top = frames_.back();
            if (top.node.i > n) {
                current_.clear();
                for (const auto& f : frames_) current_.push_back(f.letter);
                done_ = true;
                return true;
            }
            const auto [x, y] = pool_.pop(top.queue);
            const Pos i = top.node.i;
            const Pos g = detail::split_interval(*idx_, pool_, top.queue, x, y, i);
            open(idx_->next(g), i, (*idx_)[g]);
        }
    }

    const std::vector<Letter>& current() const noexcept { return current_; }

private:
    struct Frame {
        MasNode node;
        Letter letter;
        detail::IntervalQueues::Queue queue;
    };

    void open(Pos i, Pos j, Letter c) {
        Frame f{{i, j}, c, {}};
        if (i <= idx_->n()) {
            pool_.push(f.queue, i, i);
            if (detail::useful_interval(*idx_, j + 1, i - 1, i)) pool_.push(f.queue, j + 1, i - 1);
        }
        frames_.push_back(f);
    }

    const WordIndex* idx_;
    std::vector<Frame> frames_;
    detail::IntervalQueues pool_;
    std::vector<Letter> current_;
    Letter letter_ = 0;
    bool done_ = false;
};

template <class F>
void for_each_mas(const WordIndex& idx, F&& f) {
    MasDfsEnumerator e(idx);
    while (e.next()) f(e.current());
}

inline std::vector<std::vector<Letter>> enumerate_mas(const WordIndex& idx) {
    std::vector<std::vector<Letter>> out;
    for_each_mas(idx, [&](const std::vector<Letter>& v) { out.push_back(v); });
    return out;
}

/// Per-position gap lookup used to find the deepest branching node of a
/// default path in constant time.
struct GapTables {
    /// For an occurrence y of some letter: the last pair of consecutive
    /// occurrences (x, z) of that letter with z <= y and z > x + 1; x = 0 if none.
    std::vector<std::pair<Pos, Pos>> last_gap;
    /// Per letter: its last two occurrences; (0, p) for a letter seen only at p.
    std::vector<std::pair<Pos, Pos>> last_pair;
};

inline GapTables compute_gap_tables(const WordIndex& idx) {
    GapTables t;
    const Pos n = idx.n();
    t.last_gap.assign(static_cast<std::size_t>(n) + 2, {0, 0});
    t.last_pair.assign(idx.sigma() + 1, {0, 0});
    for (Letter a = 1; a <= idx.sigma(); ++a) {
        const auto occ = idx.occurrences(a);
        for (std::size_t r = 1; r < occ.size(); ++r) {
            const Pos x = occ[r - 1], y = occ[r];
            t.last_gap[static_cast<std::size_t>(y)] = y > x + 1 ? std::pair{x, y} : t.last_gap[static_cast<std::size_t>(x)];
        }
        t.last_pair[a] = occ.size() == 1 ? std::pair{0, occ[0]} : std::pair{occ[occ.size() - 2], occ.back()};
    }
    return t;
}

/// Constant-delay MAS enumeration. Each step emits an edit script of at most
/// four segments over MasNode that turns the previous MAS into the next one.
class MasIncrementalEnumerator {
public:
    using Script = EditScript<MasNode>;

    explicit MasIncrementalEnumerator(const WordIndex& idx) : idx_(&idx), gaps_(compute_gap_tables(idx)) {
        const auto cap = static_cast<std::size_t>(idx.n()) + 2;
        stack_.reserve(cap);
        marked_.reserve(cap);
        pool_.reserve(cap);
    }

    bool next() {
        tick();
        if (!marked_.empty()) {
            step();
        } else {
            if (letter_ == idx_->sigma()) return false;
            start(++letter_);
        }
        ++emitted_;
        return true;
    }

    const Script& script() const noexcept { return script_; }
    std::uint64_t emitted() const noexcept { return emitted_; }
    std::uint64_t steps() const noexcept { return steps_; }

    /// The current MAS, in time linear in its length.
    std::vector<Letter> current() const {
        std::vector<Letter> out;
        for (const auto& o : stack_) {
            if (o.terminal) out.push_back(o.letter);
            else out.insert(out.end(), static_cast<std::size_t>(idx_->rank(o.end.i) - idx_->rank(o.start.i) + 1), o.letter);
        }
        return out;
    }

    /// Every marked object is on the stack in order and owns a branching node
    /// with a non-empty queue; every unmarked object has none.
    bool check_invariants() const {
        std::size_t c = 0;
        for (std::size_t t = 0; t < stack_.size(); ++t) {
            const auto& o = stack_[t];
            const bool is_marked = c < marked_.size() && marked_[c] == t;
            if (is_marked) ++c;
            if (is_marked != (o.branch.i != 0)) return false;
            if (is_marked && o.queue.empty()) return false;
            if (o.terminal && o.branch.i != 0) return false;
        }
        return c == marked_.size();
    }

private:
    struct Object {
        MasNode start;
        MasNode end;
        Letter letter = 0;
        bool terminal = false;
        MasNode branch;  // i == 0 when absent
        detail::IntervalQueues::Queue queue;
        Pos depth = 0;   // letters before this object's first node
    };

    // Deepest node (z, v) with z > v + 1 on the default path from `from` to the occurrence `end_i`.
    MasNode rightmost_branch(MasNode from, Pos end_i) const {
        const auto [x, y] = gaps_.last_gap[static_cast<std::size_t>(end_i)];
        if (x != 0 && x >= from.i) return {y, x};
        if (from.i > from.j + 1) return from;
        return {};
    }

    void tick(std::uint64_t k = 1) noexcept { steps_ += k; }

    Pos path_letters(MasNode from, Pos end_i) const { return idx_->rank(end_i) - idx_->rank(from.i) + 1; }

    void push_path(MasNode from, MasNode end, Letter a, Pos depth) {
        Object o{from, end, a, false, rightmost_branch(from, end.i), {}, depth};
        if (o.branch.i != 0) pool_.push(o.queue, o.branch.j + 1, o.branch.i - 1);
        stack_.push_back(o);
        if (o.branch.i != 0) marked_.push_back(stack_.size() - 1);
        tick(4);
    }

    void push_terminal(Pos j, Letter a, Pos depth) {
        stack_.push_back(Object{{idx_->n() + 1, j}, {idx_->n() + 1, j}, a, true, {}, {}, depth});
        tick();
    }

    // Default path from (k, j) through every later occurrence of letter a.
    MasNode path_end(Pos k, Pos j, Letter a) const {
        const auto [x, y] = gaps_.last_pair[a];
        return x >= k ? MasNode{y, x} : MasNode{k, j};
    }

    void start(Letter c) {
        stack_.clear();
        const Pos i1 = idx_->first_occurrence(c);
        const MasNode first{i1, 0};
        const MasNode end = path_end(i1, 0, c);
        push_path(first, end, c, 0);
        const Pos len = path_letters(first, end.i);
        push_terminal(end.i, c, len);
        script_.reset(0);
        script_.edge({0, 0}, first);
        if (!(end == first)) script_.path(first, end);
        script_.final_letter(c);
        tick(5);
    }

    void step() {
        const std::size_t t = marked_.back();
        stack_.resize(t + 1);
        Object& x = stack_[t];
        const MasNode b = x.branch;
        const auto [lo, hi] = pool_.pop(x.queue);
        const Pos g = detail::split_interval(*idx_, pool_, x.queue, lo, hi, b.i);
        const Pos keep = x.depth + path_letters(x.start, b.i);
        tick(6);

        x.end = b;
        if (x.queue.empty()) {
            x.branch = b == x.start ? MasNode{} : rightmost_branch(x.start, idx_->prev(b.i));
            if (x.branch.i != 0) pool_.push(x.queue, x.branch.j + 1, x.branch.i - 1);
            else marked_.pop_back();
            tick(3);
        }

        const Pos k = idx_->next(g);
        const Letter a = (*idx_)[g];
        script_.reset(keep);
        tick(2);
        if (k > idx_->n()) {
            script_.final_letter(a);
            push_terminal(b.i, a, keep);
            return;
        }
        const MasNode child{k, b.i};
        const MasNode end = path_end(k, b.i, a);
        script_.edge(b, child);
        if (!(end == child)) script_.path(child, end);
        script_.final_letter(a);
        push_path(child, end, a, keep);
        push_terminal(end.i, a, keep + path_letters(child, end.i));
        tick(4);
    }

    const WordIndex* idx_;
    GapTables gaps_;
    std::vector<Object> stack_;
    std::vector<std::size_t> marked_;
    detail::IntervalQueues pool_;
    Script script_;
    Letter letter_ = 0;
    std::uint64_t emitted_ = 0;
    std::uint64_t steps_ = 0;
};

/// Replays a direct-engine edit script onto the explicit word.
inline void apply_mas_script(const WordIndex& idx, const EditScript<MasNode>& sc, std::vector<Letter>& out) {
    out.resize(static_cast<std::size_t>(sc.keep));
    for (const auto& seg : sc) {
        switch (seg.kind) {
            case SegmentKind::Edge:
                out.push_back(idx[seg.to.i]);
                break;
            case SegmentKind::DefaultPath:
                out.insert(out.end(), static_cast<std::size_t>(idx.rank(seg.to.i) - idx.rank(seg.from.i)), idx[seg.from.i]);
                break;
            case SegmentKind::FinalLetter:
                out.push_back(seg.letter);
                break;
        }
    }
}

}  // namespace absent
