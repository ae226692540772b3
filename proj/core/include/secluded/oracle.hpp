#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "secluded/instance.hpp"

namespace secluded {

struct OracleOptions {
    int cap = 20;
};

class OracleSizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Exhaustive subset enumeration. For connectivity properties every solution lies inside
// one strong (resp. weak) component, so the cap bounds the largest such component;
// otherwise it bounds |V|. Returns the maximum-weight feasible set, ties broken by the
// lexicographically smallest set, or nothing if that weight is below inst.w.
std::optional<Solution> brute_force_secluded(const SecludedInstance& inst, OracleOptions opt = {});

// Max TSSCS by enumeration; terminals are ignored.
std::optional<Solution> brute_force_max_tsscs(const BoundariedInstance& inst, OracleOptions opt = {});

std::optional<Solution> brute_force_clique(const Digraph& g, int k, OracleOptions opt = {});
std::optional<Solution> brute_force_alpha(const Digraph& g, int alpha, Neighborhood kind, int k, OracleOptions opt = {});
std::optional<Solution> brute_force_tournament(const Digraph& g, Neighborhood kind, int k, OracleOptions opt = {});

struct SearchStats {
    std::uint64_t nodes = 0;
};

// Exact branch and bound over connected vertex sets, for the strongly and weakly
// connected properties on graphs with at most 64 vertices. Same contract and tie-break
// as brute_force_secluded.
std::optional<Solution> search_connected_secluded(const SecludedInstance& inst, SearchStats* stats = nullptr);

} // namespace secluded
