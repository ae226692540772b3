#pragma once

#include <utility>
#include <vector>

#include "secluded/digraph.hpp"

namespace secluded {

using CrossEdge = std::pair<Vertex, Vertex>;

// A graph D attached to a base graph G by cross edges. Attachment ids are local to D.
struct Extension {
    Digraph base;
    Digraph attachment;
    std::vector<CrossEdge> to_attachment;   // (b, d): base -> attachment
    std::vector<CrossEdge> from_attachment; // (d, b): attachment -> base
};

struct ExtensionSignature {
    std::vector<VertexSet> source; // base in-neighbourhoods of source components, sorted
    std::vector<VertexSet> sink;   // base out-neighbourhoods of sink components, sorted
    std::vector<CrossEdge> conn;   // base pairs linked through D, sorted
    friend bool operator==(const ExtensionSignature&, const ExtensionSignature&) = default;
};

// Throws std::invalid_argument on out-of-range cross edges.
void validate(const Extension& ext);

// Sorts and deduplicates the cross edges.
Extension canonical(Extension ext);

// Base vertices keep their ids, attachment vertex d becomes |V(base)| + d.
Digraph extended_graph(const Extension& ext);

ExtensionSignature signature(const Extension& ext);

// Throws std::invalid_argument when the bases differ.
bool are_equivalent(const Extension& a, const Extension& b);

// Disjoint union of attachments over a shared base; b's attachment ids are shifted.
Extension union_extensions(const Extension& a, const Extension& b);

Extension compress(const Extension& ext);

// Strong connectivity of G[u] extended by ext with cross edges restricted to u.
bool extended_strongly_connected(const Extension& ext, const VertexSet& u);

// Whether strong connectivity of the u-extended graph agrees for two equivalent extensions.
bool interchange_check(const Extension& a, const Extension& b, const VertexSet& u);

} // namespace secluded
