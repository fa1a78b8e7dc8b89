#pragma once

#include <array>
#include <cstddef>

#include "absent/core.hpp"

namespace absent {

enum class SegmentKind { Edge, DefaultPath, FinalLetter };

/// One piece of a continuation: a literal edge from -> to, the default path
/// from -> to (exclusive of `from`), or the labelled edge into the sink.
template <class Node>
struct Segment {
    SegmentKind kind = SegmentKind::Edge;
    Node from{};
    Node to{};
    Letter letter = 0;
};

/// Patch turning the previous path into the next one: keep its first `keep`
/// nodes after the source, then append the segments in order.
template <class Node>
struct EditScript {
    static constexpr std::size_t kMaxSegments = 4;

    Pos keep = 0;
    std::array<Segment<Node>, kMaxSegments> segments{};
    std::size_t size = 0;

    void reset(Pos k) noexcept {
        keep = k;
        size = 0;
    }
    void edge(Node a, Node b) noexcept { segments[size++] = {SegmentKind::Edge, a, b, 0}; }
    void path(Node a, Node b) noexcept { segments[size++] = {SegmentKind::DefaultPath, a, b, 0}; }
    void final_letter(Letter c) noexcept { segments[size++] = {SegmentKind::FinalLetter, Node{}, Node{}, c}; }

    const Segment<Node>* begin() const noexcept { return segments.data(); }
    const Segment<Node>* end() const noexcept { return segments.data() + size; }
};

}  // namespace absent
