#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "secluded/instance.hpp"
#include "secluded/mask_graph.hpp"

namespace secluded {

// (X, Y, Z) partition of the terminals, relation R over X and reduced budget k'.
struct Complementation {
    VertexSet x, y, z;
    std::vector<std::pair<Vertex, Vertex>> r; // lexicographic
    int k_prime = 0;
};

// (k+1) * sum over (X,Y,Z) of 2^{|X|^2}.
std::uint64_t complementation_count(int terminals, int k);

// Canonical order: partition code (base 3, digit i for the i-th smallest terminal:
// 0 = X, 1 = Y, 2 = Z), then the R bitmask over X x X, then k' = 0..k.
void for_each_complementation(const BoundariedInstance& inst, const std::function<void(const Complementation&)>& fn);
std::vector<Complementation> enumerate_boundary_complementations(const BoundariedInstance& inst);

// The derived instance; the vertex for the i-th pair of R gets id |V(G)| + i, and the
// result has no terminals.
BoundariedInstance materialize(const BoundariedInstance& inst, const Complementation& c);

struct SetFamilyMode {
    enum class Kind { Exhaustive, Randomized };
    Kind kind = Kind::Exhaustive;
    std::uint64_t seed = 0;
    double failure = 1e-3;

    static SetFamilyMode exhaustive() { return {}; }
    static SetFamilyMode randomized(std::uint64_t seed, double failure) { return {Kind::Randomized, seed, failure}; }
};

// Subsets of {0..n-1} such that for disjoint A, B with |A| <= a, |B| <= b some member
// contains A and avoids B. b = 0 or a = 0 give a single set. Otherwise exhaustive mode lists all 2^n subsets (n <= 20). Randomized
// mode keeps each element with probability a/(a+b) and draws ceil(ln(3^n/eps)/P) sets,
// P being the chance a single draw separates a fixed pair.
std::vector<Mask> set_family(int n, int a, int b, const SetFamilyMode& mode);

// Checks the covering property by enumerating every admissible (A, B).
bool validate_covering(const std::vector<Mask>& family, int n, int a, int b);

// One entry per complementation in canonical order; solutions use materialized ids.
using ComplementationSolutions = std::vector<std::optional<Solution>>;

// Small search over sets of size <= q + k + 4k^2 and large search through the apex
// construction. Exact for every graph in exhaustive mode.
ComplementationSolutions solve_unbreakable(const BoundariedInstance& inst, int q, const SetFamilyMode& mode);

// Max TSSCS by enumeration for every complementation; a test oracle.
ComplementationSolutions brute_force_complementations(const BoundariedInstance& inst);

struct Separation {
    VertexSet a, b;
    int order() const { return static_cast<int>(set_intersection(a, b).size()); }
};

struct SeparationResult {
    std::optional<Separation> separation;
    bool certified = true; // false when the budget cut the exhaustive search short
};

// (q,k)-separation of the underlying undirected graph: order <= k, |A\B| > q, |B\A| > q.
// Separators are tried by size, then lexicographically; past `budget` separator
// candidates a minimum vertex cut heuristic takes over and a negative answer is
// reported uncertified.
SeparationResult find_separation(const Digraph& g, int q, int k, std::uint64_t budget = 2'000'000);

bool is_separation(const Digraph& g, const Separation& s);

struct RecursiveConfig {
    enum class Stall { SolveDirectly, Fail };
    int q = 3;
    SetFamilyMode family;
    Stall stall = Stall::SolveDirectly;
    std::uint64_t separation_budget = 2'000'000;
    int max_depth = 64;
};

struct RecursiveStats {
    std::uint64_t separations_found = 0;
    std::uint64_t unbreakable_solves = 0;
    std::uint64_t fallbacks = 0;      // reduced instance did not shrink
    std::uint64_t recursion_edges = 0;
    std::uint64_t reductions = 0;     // rule applications
    int max_depth = 0;
};

struct BoundariedResult {
    ComplementationSolutions solutions;
    RecursiveStats stats;
};

BoundariedResult solve_boundaried(const BoundariedInstance& inst, const RecursiveConfig& config = {});

// I = O = T = {}, B = V.
std::optional<Solution> solve_tsscs(const Digraph& g, Weight w, int k, const RecursiveConfig& config = {},
                                    RecursiveStats* stats = nullptr);

} // namespace secluded
