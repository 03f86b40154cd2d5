#pragma once

#include <optional>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

// Graph on the edges of a source graph; two Gallai vertices are adjacent
// iff their edges form an induced P3. Gallai vertex ids equal source edge ids.
struct GallaiGraph {
    Graph base;
    std::vector<EdgeId> to_edge;
    std::vector<Vertex> from_edge;
};

GallaiGraph gallai_graph(const Graph& g);

// Minimum vertex cover, lexicographically smallest among the minimum ones.
// With an upper bound, returns nullopt when every cover is larger.
std::optional<std::vector<Vertex>> min_vertex_cover(const Graph& g, std::optional<int> upper_bound = std::nullopt);

struct K1Result {
    int k1 = 0;
    std::vector<Vertex> cover;        // Gallai ids (= edge ids), ascending
    std::vector<Vertex> independent;  // complement, ascending
};

// Minimum number of weak edges over single-color STC labelings.
K1Result k1(const Graph& g);

} // namespace stc
