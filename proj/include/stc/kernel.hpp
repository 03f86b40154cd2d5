#pragma once

#include <cstdint>
#include <vector>

#include "stc/instance.hpp"

namespace stc {

// Number of distinct nonempty edge lists.
int tau(const ELInstance& inst);

// |E(N(K), N^2(K))| for a set K of vertices: edges with one endpoint adjacent
// to K (outside K) and the other at distance exactly two from K.
int boundary_edge_count(const Graph& g, const std::vector<Vertex>& clique);

// One application of the clique reduction. Vertex and edge ids refer to
// `before` unless noted.
struct RuleApplication {
    ELInstance before;
    std::vector<Vertex> clique;
    int tau = 0;
    int boundary_edges = 0;
    std::vector<Vertex> important;
    std::vector<Vertex> deleted_vertices;
    std::vector<EdgeId> deleted_edges;
    std::vector<EdgeId> empty_list_deleted;
    int budget_decrement = 0;
    // before id -> id in the reduced instance, -1 if deleted.
    std::vector<Vertex> vertex_map;
};

struct CliqueReduction {
    ELInstance reduced;
    RuleApplication record;
};

// Throws ContractError unless `clique` is a closed critical clique of
// inst.g with |K| > tau * |E(N(K), N^2(K))|.
CliqueReduction reduce_closed_clique(const ELInstance& inst, const std::vector<Vertex>& clique);

struct KernelOptions {
    // Inside a critical clique, rewrite psi = {} to {1} and pay one unit of budget.
    bool normalize_empty_cc = false;
};

struct KernelTrace {
    int tau = 0;  // of the input instance
    // Edges of the input rewritten by normalize_empty_cc.
    std::vector<EdgeId> normalized_edges;
    std::vector<RuleApplication> applications;
    // The budget went negative; `reduced` is a fixed no-instance.
    bool trivially_no = false;
};

struct KernelResult {
    ELInstance reduced;
    KernelTrace trace;
    int reduced_tau = 0;
    int reduced_k1 = 0;
    // (reduced_tau + 1) * 2 * reduced_k1
    std::int64_t bound = 0;

    bool within_bound() const { return reduced.g.num_vertices() <= bound; }
};

// Applies the reduction to closed critical cliques, smallest member first,
// recomputing the decomposition after each step, until no clique qualifies.
KernelResult kernelize(const ELInstance& inst, const KernelOptions& options = {});

// The no-instance emitted when the budget runs out: a P3 whose two edges
// may only take color 1, with k = 0.
ELInstance trivial_no_instance(int c);

// Turns a witness for result.reduced into one for the kernelized input.
// Throws ContractError for a trivially-no result.
Labeling lift_labeling(const KernelResult& result, const Labeling& reduced_witness);

} // namespace stc
