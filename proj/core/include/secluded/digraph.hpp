#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "secluded/vertex_set.hpp"

namespace secluded {

using Edge = std::pair<Vertex, Vertex>;

enum class Neighborhood { In, Out, Total };

// Adds two weights, throwing std::overflow_error on wrap-around.
Weight checked_add(Weight a, Weight b);

// Immutable directed graph on vertices 0..n-1 with non-negative vertex weights.
// Edge lists are deduplicated on construction; self-loops are rejected.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, std::vector<Edge> edges, std::vector<Weight> weights = {});

    int size() const { return static_cast<int>(out_.size()); }
    std::size_t edge_count() const { return m_; }
    bool has_vertex(Vertex v) const { return v >= 0 && v < size(); }

    const VertexSet& out(Vertex v) const { return out_[v]; }
    const VertexSet& in(Vertex v) const { return in_[v]; }
    bool has_edge(Vertex u, Vertex v) const;
    // Adjacent in the underlying undirected graph.
    bool adjacent(Vertex u, Vertex v) const { return has_edge(u, v) || has_edge(v, u); }

    Weight weight(Vertex v) const { return weights_[v]; }
    const std::vector<Weight>& weights() const { return weights_; }
    Weight weight_of(const VertexSet& s) const;

    // All edges, sorted lexicographically.
    std::vector<Edge> edges() const;

    // Same structure, different weights.
    Digraph with_weights(std::vector<Weight> weights) const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.out_ == b.out_ && a.weights_ == b.weights_;
    }

private:
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::vector<Weight> weights_;
    std::size_t m_ = 0;
};

// Throws std::invalid_argument if some member of s is not a vertex of g.
void require_vertices(const Digraph& g, const VertexSet& s);

VertexSet out_neighbors(const Digraph& g, const VertexSet& s, bool closed = false);
VertexSet in_neighbors(const Digraph& g, const VertexSet& s, bool closed = false);
VertexSet total_neighbors(const Digraph& g, const VertexSet& s, bool closed = false);
VertexSet neighbors(const Digraph& g, Neighborhood kind, const VertexSet& s, bool closed = false);

// Subgraph induced by s; vertex i of the result is s[i].
Digraph induced(const Digraph& g, const VertexSet& s);
Digraph reverse(const Digraph& g);
// Adds the reverse of every edge.
Digraph symmetrize(const Digraph& g);
bool is_symmetric(const Digraph& g);

// Strong components ordered by their smallest vertex; each component sorted.
std::vector<VertexSet> strong_components(const Digraph& g);
std::vector<VertexSet> weak_components(const Digraph& g);

struct Condensation {
    Digraph dag;                       // vertex i stands for components[i]
    std::vector<VertexSet> components;
    std::vector<int> component_of;     // per original vertex
};
Condensation condensation(const Digraph& g);

// Both are false on the empty graph.
bool is_strongly_connected(const Digraph& g);
bool is_weakly_connected(const Digraph& g);

bool is_independent(const Digraph& g, const VertexSet& s);

struct AlphaCheck {
    bool bounded = true;
    std::optional<VertexSet> witness; // independent set of size alpha+1 when not bounded
};
// Enumerates (alpha+1)-subsets in lexicographic order; the witness is the first hit.
AlphaCheck is_alpha_bounded(const Digraph& g, int alpha);

} // namespace secluded
