#pragma once

#include <span>
#include <vector>

#include "absent/skeleton.hpp"

namespace absent {

// A labelled skeleton Sk exposes dag() and append_letter(prev, v, out), which
// appends whatever letter node v contributes when entered from prev.

template <class Sk>
std::vector<Letter> decode_path(const Sk& sk, std::span<const Node> path) {
    std::vector<Letter> out;
    for (std::size_t t = 1; t < path.size(); ++t) sk.append_letter(path[t - 1], path[t], out);
    return out;
}

/// Applies an edit script directly to the decoded word.
template <class Sk>
void apply_script_letters(const Sk& sk, const EditScript<Node>& sc, std::vector<Letter>& out) {
    const auto& g = sk.dag();
    out.resize(static_cast<std::size_t>(sc.keep));
    for (const auto& seg : sc) {
        if (seg.kind == SegmentKind::Edge) {
            sk.append_letter(seg.from, seg.to, out);
        } else if (seg.kind == SegmentKind::DefaultPath) {
            for (Node c = seg.from; c != seg.to;) {
                const Node nx = g.down(c);
                sk.append_letter(c, nx, out);
                c = nx;
            }
        }
    }
}

/// Incremental word enumerator over a labelled skeleton; the explicit word is
/// available after each step in time linear in its length.
template <class Sk>
class SkeletonWordEnumerator {
public:
    explicit SkeletonWordEnumerator(const Sk& sk) : sk_(&sk), paths_(sk.dag()) {}

    bool next() { return paths_.next(); }
    const EditScript<Node>& script() const noexcept { return paths_.script(); }
    std::vector<Letter> current() const { return decode_path(*sk_, paths_.materialize()); }
    std::uint64_t steps() const noexcept { return paths_.steps(); }
    bool check_invariants() const { return paths_.check_invariants(); }

private:
    const Sk* sk_;
    PathEnumerator paths_;
};

template <class Sk, class F>
void for_each_word(const Sk& sk, F&& f) {
    SkeletonWordEnumerator<Sk> e(sk);
    while (e.next()) f(e.current());
}

}  // namespace absent
