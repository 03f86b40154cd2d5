#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace stc {

using Vertex = int;
using EdgeId = int;

// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph.
//
// Edge ids follow the lexicographic order of (min, max) endpoint pairs, so
// any two graphs with the same edge set number their edges identically.
class Graph {
public:
    Graph() = default;

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    // Sorted neighbor list of v.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    // Edge ids parallel to neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const { return adj_edges_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(Vertex u, Vertex v) const;
    std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    friend Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> adj_edges_;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> matrix_;
};

// Throws ValidationError on out-of-range vertices, self-loops and duplicate
// pairs (in either orientation).
Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs);

inline Graph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

// Subgraph induced by `keep` (sorted ascending); vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Two edges {u,v},{v,w} with {u,w} not an edge. Stored with first < second.
struct P3Pair {
    EdgeId first = 0;
    EdgeId second = 0;

    friend bool operator==(const P3Pair&, const P3Pair&) = default;
    friend auto operator<=>(const P3Pair&, const P3Pair&) = default;
};

// All induced P3s as edge-id pairs, sorted, without duplicates.
std::vector<P3Pair> induced_p3s(const Graph& g);

enum class CliqueClass { Open, Closed };

struct CriticalCliqueDecomposition {
    // Members of each critical clique, ascending; cliques ordered by smallest member.
    std::vector<std::vector<Vertex>> cliques;
    std::vector<int> clique_of;
    // Quotient graph on clique indices.
    Graph cc_graph;
    std::vector<CliqueClass> class_of;

    // Union of neighbor cliques of clique `k`, sorted.
    std::vector<Vertex> neighborhood(int k) const;
    // Union of cliques at distance exactly two from `k` in cc_graph, sorted.
    std::vector<Vertex> second_neighborhood(int k) const;
};

CriticalCliqueDecomposition critical_cliques(const Graph& g);

} // namespace stc
