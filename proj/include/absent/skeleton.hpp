#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "absent/core.hpp"
#include "absent/edit_script.hpp"

namespace absent {

using Node = std::int32_t;
inline constexpr Node kNone = -1;

using BigCount = boost::multiprecision::cpp_int;

/// Edge-list description of a skeleton DAG, the form accepted by validate().
/// Same-level edges spell out the sibling chains; every other edge must go
/// strictly down a level.
struct SkeletonSpec {
    Node node_count = 0;
    Node source = 0;
    Node sink = 0;
    std::vector<Pos> level;
    std::vector<std::pair<Node, Node>> edges;
};

/// Returns every violated skeleton axiom as a human-readable line; empty means valid.
inline std::vector<std::string> validate(const SkeletonSpec& g) {
    std::vector<std::string> bad;
    const Node N = g.node_count;
    auto in_range = [N](Node v) { return v >= 0 && v < N; };
    if (N < 2) bad.push_back("fewer than two nodes");
    if (static_cast<Node>(g.level.size()) != N) bad.push_back("level table size differs from node count");
    if (!in_range(g.source) || !in_range(g.sink)) bad.push_back("source or sink out of range");
    if (g.source == g.sink) bad.push_back("source equals sink");
    if (!bad.empty()) return bad;

    const Pos m = g.level[static_cast<std::size_t>(g.sink)];
    if (m < 1) bad.push_back("sink level must be at least 1");
    if (g.level[static_cast<std::size_t>(g.source)] != 0) bad.push_back("source is not on level 0");
    std::vector<Node> per_level(static_cast<std::size_t>(std::max<Pos>(m, 0)) + 1, 0);
    for (Node v = 0; v < N; ++v) {
        const Pos l = g.level[static_cast<std::size_t>(v)];
        if (l < 0 || l > m) {
            bad.push_back("node " + std::to_string(v) + " has level " + std::to_string(l) + " outside [0:" + std::to_string(m) + "]");
            continue;
        }
        ++per_level[static_cast<std::size_t>(l)];
    }
    if (!bad.empty()) return bad;
    if (per_level[0] > 1) bad.push_back("multiple sources");
    if (per_level[static_cast<std::size_t>(m)] > 1) bad.push_back("multiple sinks");
    for (Pos l = 0; l <= m; ++l)
        if (per_level[static_cast<std::size_t>(l)] == 0) bad.push_back("level " + std::to_string(l) + " is empty");

    std::vector<int> down_count(static_cast<std::size_t>(N), 0);
    std::vector<Node> sib_next(static_cast<std::size_t>(N), kNone);
    std::vector<int> sib_in(static_cast<std::size_t>(N), 0);
    std::vector<Pos> source_levels;
    for (auto [x, y] : g.edges) {
        if (!in_range(x) || !in_range(y)) {
            bad.push_back("edge endpoint out of range");
            continue;
        }
        const Pos lx = g.level[static_cast<std::size_t>(x)], ly = g.level[static_cast<std::size_t>(y)];
        const std::string e = "edge " + std::to_string(x) + "->" + std::to_string(y);
        if (x == g.sink) bad.push_back(e + " leaves the sink");
        if (lx > ly) bad.push_back(e + " goes up a level");
        else if (lx == ly) {
            if (x == y) bad.push_back(e + " is a self-loop");
            else if (sib_next[static_cast<std::size_t>(x)] != kNone) bad.push_back("node " + std::to_string(x) + " has two sibling successors");
            else {
                sib_next[static_cast<std::size_t>(x)] = y;
                ++sib_in[static_cast<std::size_t>(y)];
            }
        } else {
            ++down_count[static_cast<std::size_t>(x)];
            if (x == g.source) source_levels.push_back(ly);
        }
    }
    for (Node v = 0; v < N; ++v) {
        if (v == g.source || v == g.sink) continue;
        const int c = down_count[static_cast<std::size_t>(v)];
        if (c != 1) bad.push_back("node " + std::to_string(v) + " has " + std::to_string(c) + " down edges");
        if (sib_in[static_cast<std::size_t>(v)] > 1) bad.push_back("node " + std::to_string(v) + " has two sibling predecessors");
    }
    std::sort(source_levels.begin(), source_levels.end());
    if (std::adjacent_find(source_levels.begin(), source_levels.end()) != source_levels.end())
        bad.push_back("two source edges reach the same level");

    // Each level's sibling edges must form one chain through all of its nodes.
    std::vector<Node> heads(per_level.size(), 0), reached(per_level.size(), 0);
    for (Node v = 0; v < N; ++v)
        if (sib_in[static_cast<std::size_t>(v)] == 0) ++heads[static_cast<std::size_t>(g.level[static_cast<std::size_t>(v)])];
    for (Node v = 0; v < N; ++v) {
        if (sib_in[static_cast<std::size_t>(v)] != 0) continue;
        Node steps = 0;
        for (Node c = v; c != kNone && steps <= N; c = sib_next[static_cast<std::size_t>(c)]) ++steps;
        reached[static_cast<std::size_t>(g.level[static_cast<std::size_t>(v)])] += steps;
    }
    for (Pos l = 0; l <= m; ++l) {
        const auto L = static_cast<std::size_t>(l);
        if (per_level[L] == 0) continue;
        if (heads[L] != 1 || reached[L] != per_level[L])
            bad.push_back("sibling edges on level " + std::to_string(l) + " do not form a single chain");
    }
    return bad;
}

/// An m-skeleton DAG: levels 0..m, one source and one sink, a sibling chain
/// per level, and a single down edge for every inner node. It encodes the
/// larger DAG in which a node also reaches every later sibling of its down
/// target.
class SkeletonDag {
public:
    SkeletonDag() = default;

    /// Builds from the leveled form: `order` lists all nodes level by level in
    /// sibling order, level l occupying [level_begin[l], level_begin[l+1]).
    /// `down[v]` is ignored for the source and the sink.
    static SkeletonDag from_levels(std::vector<Node> order, std::vector<std::size_t> level_begin, std::vector<Node> down,
                                   std::vector<Node> source_targets) {
        SkeletonDag g;
        const auto N = order.size();
        g.m_ = static_cast<Pos>(level_begin.size()) - 2;
        g.level_.assign(N, 0);
        g.pos_.assign(N, 0);
        g.link_.assign(N, kNone);
        for (Pos l = 0; l <= g.m_; ++l) {
            const auto b = level_begin[static_cast<std::size_t>(l)], e = level_begin[static_cast<std::size_t>(l) + 1];
            for (auto t = b; t < e; ++t) {
                const auto v = static_cast<std::size_t>(order[t]);
                g.level_[v] = l;
                g.pos_[v] = static_cast<Pos>(t - b);
                if (t + 1 < e) g.link_[v] = order[t + 1];
            }
        }
        g.source_ = order[level_begin[0]];
        g.sink_ = order[level_begin[static_cast<std::size_t>(g.m_)]];
        g.order_ = std::move(order);
        g.level_begin_ = std::move(level_begin);
        g.down_ = std::move(down);
        g.down_[static_cast<std::size_t>(g.sink_)] = kNone;
        std::sort(source_targets.begin(), source_targets.end(),
                  [&g](Node a, Node b) { return g.level(a) < g.level(b); });
        g.source_targets_ = std::move(source_targets);
        g.down_[static_cast<std::size_t>(g.source_)] = g.source_targets_.empty() ? kNone : g.source_targets_.front();
        return g;
    }

    /// Validates the edge list and converts it; throws InvalidSkeleton on any violation.
    static SkeletonDag from_spec(const SkeletonSpec& spec) {
        auto bad = validate(spec);
        if (!bad.empty()) throw Error(ErrorCode::InvalidSkeleton, bad.front());
        const auto N = static_cast<std::size_t>(spec.node_count);
        const Pos m = spec.level[static_cast<std::size_t>(spec.sink)];
        std::vector<Node> down(N, kNone), sib(N, kNone), targets;
        std::vector<char> has_pred(N, 0);
        for (auto [x, y] : spec.edges) {
            const Pos lx = spec.level[static_cast<std::size_t>(x)], ly = spec.level[static_cast<std::size_t>(y)];
            if (lx == ly) {
                sib[static_cast<std::size_t>(x)] = y;
                has_pred[static_cast<std::size_t>(y)] = 1;
            } else if (x == spec.source) {
                targets.push_back(y);
            } else {
                down[static_cast<std::size_t>(x)] = y;
            }
        }
        std::vector<Node> heads(static_cast<std::size_t>(m) + 1, kNone);
        for (Node v = 0; v < spec.node_count; ++v)
            if (!has_pred[static_cast<std::size_t>(v)]) heads[static_cast<std::size_t>(spec.level[static_cast<std::size_t>(v)])] = v;
        std::vector<Node> order;
        std::vector<std::size_t> begin;
        order.reserve(N);
        for (Pos l = 0; l <= m; ++l) {
            begin.push_back(order.size());
            for (Node v = heads[static_cast<std::size_t>(l)]; v != kNone; v = sib[static_cast<std::size_t>(v)]) order.push_back(v);
        }
        begin.push_back(order.size());
        return from_levels(std::move(order), std::move(begin), std::move(down), std::move(targets));
    }

    SkeletonSpec to_spec() const {
        SkeletonSpec s;
        s.node_count = node_count();
        s.source = source_;
        s.sink = sink_;
        s.level = level_;
        for (Node t : source_targets_) s.edges.emplace_back(source_, t);
        for (Node v = 0; v < node_count(); ++v) {
            if (v != source_ && v != sink_) s.edges.emplace_back(v, down(v));
            if (link(v) != kNone) s.edges.emplace_back(v, link(v));
        }
        return s;
    }

    Node node_count() const noexcept { return static_cast<Node>(level_.size()); }
    Pos m() const noexcept { return m_; }
    Node source() const noexcept { return source_; }
    Node sink() const noexcept { return sink_; }
    Pos level(Node v) const { return level_[static_cast<std::size_t>(v)]; }
    Node down(Node v) const { return down_[static_cast<std::size_t>(v)]; }
    Node link(Node v) const { return link_[static_cast<std::size_t>(v)]; }
    Pos pos(Node v) const { return pos_[static_cast<std::size_t>(v)]; }
    std::span<const Node> source_targets() const { return source_targets_; }

    std::span<const Node> level_nodes(Pos l) const {
        const auto L = static_cast<std::size_t>(l);
        return {order_.data() + level_begin_[L], order_.data() + level_begin_[L + 1]};
    }

    /// Whether (v, u) is an edge of the encoded DAG.
    bool has_edge(Node v, Node u) const {
        if (v == source_) {
            for (Node t : source_targets_)
                if (level(t) == level(u) && pos(t) <= pos(u)) return true;
            return false;
        }
        if (v == sink_) return false;
        const Node d = down(v);
        return d == u || (level(d) == level(u) && pos(d) < pos(u));
    }

private:
    std::vector<Pos> level_, pos_;
    std::vector<Node> down_, link_, order_, source_targets_;
    std::vector<std::size_t> level_begin_;
    Node source_ = kNone, sink_ = kNone;
    Pos m_ = 0;
};

/// Children of v in the encoded DAG, in sibling order per down target.
inline std::vector<Node> expanded_children(const SkeletonDag& g, Node v) {
    std::vector<Node> out;
    auto chain = [&](Node t) {
        for (; t != kNone; t = g.link(t)) out.push_back(t);
    };
    if (v == g.sink()) return out;
    if (v == g.source()) {
        for (Node t : g.source_targets()) chain(t);
    } else {
        chain(g.down(v));
    }
    return out;
}

/// d(v): length of the default path from v to the sink; nb(v): first
/// branching node on that path (v itself if branching), kNone if there is none.
struct DefaultsTable {
    std::vector<Pos> d;
    std::vector<Node> nb;
};

inline DefaultsTable compute_defaults(const SkeletonDag& g) {
    DefaultsTable t;
    const auto N = static_cast<std::size_t>(g.node_count());
    t.d.assign(N, 0);
    t.nb.assign(N, kNone);
    for (Pos l = g.m() - 1; l >= 1; --l) {
        for (Node v : g.level_nodes(l)) {
            const Node dn = g.down(v);
            t.d[static_cast<std::size_t>(v)] = t.d[static_cast<std::size_t>(dn)] + 1;
            t.nb[static_cast<std::size_t>(v)] = g.link(dn) != kNone ? v : t.nb[static_cast<std::size_t>(dn)];
        }
    }
    return t;
}

/// Incremental source-to-sink path enumerator over the encoded DAG with
/// constant work between outputs. Each call to next() produces an edit script
/// against the previous path; materialize() expands the current one.
///
/// The order is fixed: source edges by target level, and within one source
/// edge the branching nodes of a default path are taken nearest first, before
/// the sibling alternatives of the path's own first edge.
class PathEnumerator {
public:
    explicit PathEnumerator(const SkeletonDag& g) : g_(&g), def_(compute_defaults(g)) {
        const auto cap = static_cast<std::size_t>(g.m()) + 2;
        stack_.resize(cap);
        marked_.resize(cap);
    }

    /// Advances to the next path; false once every path has been produced.
    bool next() {
        tick();
        if (ctop_ > 0) {
            transition();
            ++emitted_;
            return true;
        }
        if (next_target_ < g_->source_targets().size()) {
            start(g_->source_targets()[next_target_++]);
            ++emitted_;
            return true;
        }
        top_ = 0;
        return false;
    }

    const EditScript<Node>& script() const noexcept { return script_; }
    std::uint64_t emitted() const noexcept { return emitted_; }

    /// Operation counter for delay instrumentation.
    std::uint64_t steps() const noexcept { return steps_; }

    /// The current path as explicit nodes, source and sink included.
    std::vector<Node> materialize() const {
        if (emitted_ == 0 || top_ == 0) throw Error(ErrorCode::NoCurrentPath, "no path has been produced");
        std::vector<Node> path{stack_[1].v};
        for (std::size_t t = 1; t <= top_; ++t) {
            const Node from = stack_[t].v;
            const Node to = t < top_ ? stack_[t + 1].v : stack_[t].u;
            if (g_->has_edge(from, to)) {
                path.push_back(to);
                continue;
            }
            for (Node c = from; c != to;) {
                c = g_->down(c);
                path.push_back(c);
            }
        }
        return path;
    }

    /// Marked objects must appear in the pointer stack in stack order, and only those.
    bool check_invariants() const {
        std::size_t c = 1;
        for (std::size_t t = 1; t <= top_; ++t) {
            const bool in_c = c <= ctop_ && marked_[c] == t;
            if (stack_[t].marked != in_c) return false;
            if (in_c) ++c;
        }
        return c == ctop_ + 1;
    }

private:
    // (v, v', v'', len, u, marked): the edge v->u (len 1) or the default path
    // v ~> u, with v' the next unexplored sibling alternative out of v and v''
    // the next unexplored branching node on the path. `depth` is v's index on
    // the current path, the source being 0.
    struct PathObject {
        Node v, alt, branch;
        Pos len;
        Node u;
        bool marked;
        Pos depth;
    };

    void tick(std::uint64_t k = 1) noexcept { steps_ += k; }

    Pos d(Node v) const { return def_.d[static_cast<std::size_t>(v)]; }
    Node nb(Node v) const { return v == kNone ? kNone : def_.nb[static_cast<std::size_t>(v)]; }

    void push(const PathObject& x) {
        stack_[++top_] = x;
        if (x.marked) marked_[++ctop_] = top_;
        tick(2);
    }

    PathObject default_object(Node v, Pos depth) const {
        const Node dn = g_->down(v);
        const Node alt = g_->link(dn);
        const Node br = nb(dn);
        return {v, alt, br, d(v), g_->sink(), alt != kNone || br != kNone, depth};
    }

    void start(Node v) {
        top_ = ctop_ = 0;
        const Node s = g_->source();
        script_.reset(0);
        script_.edge(s, v);
        const Node alt = g_->link(v);
        push({s, alt, kNone, 1, v, alt != kNone, 0});
        if (v != g_->sink()) {
            push(default_object(v, 1));
            script_.path(v, g_->sink());
        }
        tick(4);
    }

    void transition() {
        top_ = marked_[ctop_];
        PathObject& x = stack_[top_];
        tick(2);
        script_.reset(x.depth);
        if (x.branch != kNone) {
            const Node b = x.branch;
            const Node dn = g_->down(b);
            const Node sib = g_->link(dn);
            const Node after = nb(dn);
            if (after != kNone && d(after) >= d(x.u)) {
                x.branch = after;
            } else {
                x.branch = kNone;
                x.marked = x.alt != kNone;
                if (!x.marked) --ctop_;
            }
            const Pos depth_b = x.depth + d(x.v) - d(b);
            script_.path(x.v, b);
            script_.edge(b, sib);
            script_.path(sib, g_->sink());
            const Node sib2 = g_->link(sib);
            push({b, sib2, kNone, 1, sib, sib2 != kNone, depth_b});
            push(default_object(sib, depth_b + 1));
            tick(8);
        } else {
            const Node alt = x.alt;
            x.alt = g_->link(alt);
            x.marked = x.alt != kNone;
            if (!x.marked) --ctop_;
            const Pos depth = x.depth + 1;
            // Siblings never sit on the sink level, so alt has a default path.
            script_.edge(x.v, alt);
            script_.path(alt, g_->sink());
            push(default_object(alt, depth));
            tick(6);
        }
    }

    const SkeletonDag* g_;
    DefaultsTable def_;
    std::vector<PathObject> stack_;
    std::vector<std::size_t> marked_;
    std::size_t top_ = 0, ctop_ = 0, next_target_ = 0;
    EditScript<Node> script_;
    std::uint64_t emitted_ = 0, steps_ = 0;
};

/// Replays a script onto an explicit node path (source included).
inline void apply_script(const SkeletonDag& g, const EditScript<Node>& sc, std::vector<Node>& path) {
    path.resize(static_cast<std::size_t>(sc.keep) + 1);
    if (path.size() == 1) path[0] = g.source();
    for (const auto& seg : sc) {
        if (seg.kind == SegmentKind::Edge) {
            path.push_back(seg.to);
        } else if (seg.kind == SegmentKind::DefaultPath) {
            for (Node c = seg.from; c != seg.to;) {
                c = g.down(c);
                path.push_back(c);
            }
        }
    }
}

/// Calls f(path) for every source-to-sink path, in enumeration order.
template <class F>
void for_each_path(const SkeletonDag& g, F&& f) {
    PathEnumerator e(g);
    while (e.next()) f(e.materialize());
}

inline std::vector<std::vector<Node>> enumerate_paths(const SkeletonDag& g) {
    std::vector<std::vector<Node>> out;
    for_each_path(g, [&](std::vector<Node> p) { out.push_back(std::move(p)); });
    return out;
}

/// Number of source-to-sink paths, by suffix sums over each sibling chain
/// from the deepest level up.
inline BigCount count_paths(const SkeletonDag& g) {
    const auto N = static_cast<std::size_t>(g.node_count());
    std::vector<BigCount> from(N), tail(N);
    from[static_cast<std::size_t>(g.sink())] = 1;
    tail[static_cast<std::size_t>(g.sink())] = 1;
    for (Pos l = g.m() - 1; l >= 1; --l) {
        auto nodes = g.level_nodes(l);
        for (Node v : nodes) from[static_cast<std::size_t>(v)] = tail[static_cast<std::size_t>(g.down(v))];
        BigCount acc = 0;
        for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
            acc += from[static_cast<std::size_t>(*it)];
            tail[static_cast<std::size_t>(*it)] = acc;
        }
    }
    BigCount total = 0;
    for (Node t : g.source_targets()) total += tail[static_cast<std::size_t>(t)];
    return total;
}

}  // namespace absent
