#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "stc/instance.hpp"

namespace stc {

// Explicit caps; exceeding one raises ResourceLimitError instead of guessing.
struct SolverLimits {
    // Oracle: product over edges of (|psi(e)| + 1).
    std::uint64_t max_enum = 10'000'000;
    // Subset DP: 2^m table entries per color layer.
    std::uint64_t max_subsets = std::uint64_t{1} << 20;
    // Branching solver: search-tree nodes over cover assignments.
    std::uint64_t max_nodes = 200'000'000;
};

struct SolveStats {
    // Labeling-tree nodes (oracle), subset-table entries (DP) or cover
    // assignment nodes (branching solver).
    std::uint64_t explored = 0;
};

struct SolveResult {
    bool yes = false;
    std::optional<Labeling> witness;  // present iff yes
    SolveStats stats;
};

// Depth-first enumeration of all list-respecting labelings in lexicographic
// order of (color of edge 0, color of edge 1, ...), colors ordered 0 < 1 < ... < c.
// Partial labelings with an STC conflict or too many weak edges are cut.
SolveResult solve_oracle(const ELInstance& inst, const SolverLimits& limits = {});

// List-colorable-subgraph dynamic program over subsets of the Gallai graph.
SolveResult solve_subset_dp(const ELInstance& inst, const SolverLimits& limits = {});

// Enumerates colorings of a minimum Gallai vertex cover and extends each
// greedily over the remaining independent set.
SolveResult solve_fpt(const ELInstance& inst, const SolverLimits& limits = {});

// For a Multi-STC instance with c > k1(g): a zero-weak witness that gives each
// of the k1 cover edges its own color and every other edge color k1 + 1.
std::optional<SolveResult> shortcut_multi(const MultiInstance& inst);

enum class Algorithm { Oracle, Dp, Fpt, Auto };

std::optional<Algorithm> parse_algorithm(const std::string& name);

// Auto: shortcut_multi (Multi-STC only), then solve_fpt, then solve_subset_dp
// if the branching solver hits its cap.
SolveResult solve(const AnyInstance& inst, Algorithm algo, const SolverLimits& limits = {});

} // namespace stc
