#include "stc/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "stc/errors.hpp"

namespace stc {

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        return false;
    }
    const auto bit = static_cast<std::size_t>(v);
    return (matrix_[static_cast<std::size_t>(u) * words_per_row_ + bit / 64] >> (bit % 64)) & 1U;
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
    if (!has_edge(u, v)) {
        return std::nullopt;
    }
    const auto& row = adj_[u];
    const auto it = std::lower_bound(row.begin(), row.end(), v);
    return adj_edges_[u][static_cast<std::size_t>(it - row.begin())];
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    if (n < 0) {
        throw ValidationError("negative vertex count");
    }
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw ValidationError("vertex out of range in pair (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
        }
        if (a == b) {
            throw ValidationError("self-loop at vertex " + std::to_string(a));
        }
        g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    const auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        throw ValidationError("duplicate edge (" + std::to_string(dup->u) + "," +
                              std::to_string(dup->v) + ")");
    }

    g.adj_.assign(static_cast<std::size_t>(n), {});
    g.adj_edges_.assign(static_cast<std::size_t>(n), {});
    g.words_per_row_ = (n + 63) / 64;
    g.matrix_.assign(static_cast<std::size_t>(n) * g.words_per_row_, 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto [u, v] = g.edges_[e];
        g.adj_[u].push_back(v);
        g.adj_edges_[u].push_back(e);
        g.adj_[v].push_back(u);
        g.adj_edges_[v].push_back(e);
        g.matrix_[static_cast<std::size_t>(u) * g.words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
        g.matrix_[static_cast<std::size_t>(v) * g.words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }
    // Edges are visited in (u,v) order, so u's list is sorted, but v's list
    // receives its smaller neighbors interleaved; sort both arrays together.
    for (Vertex v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        auto& ids = g.adj_edges_[v];
        std::vector<std::size_t> order(nb.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nb[a] < nb[b]; });
        std::vector<Vertex> sorted_nb(nb.size());
        std::vector<EdgeId> sorted_ids(ids.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            sorted_nb[i] = nb[order[i]];
            sorted_ids[i] = ids[order[i]];
        }
        nb = std::move(sorted_nb);
        ids = std::move(sorted_ids);
    }
    return g;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<int> new_id(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        new_id[keep[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : g.edges()) {
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0) {
            pairs.emplace_back(new_id[e.u], new_id[e.v]);
        }
    }
    return build_graph(static_cast<int>(keep.size()), pairs);
}

std::vector<P3Pair> induced_p3s(const Graph& g) {
    std::vector<P3Pair> out;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto nb = g.neighbors(v);
        const auto ids = g.incident_edges(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (!g.has_edge(nb[i], nb[j])) {
                    out.push_back(P3Pair{std::min(ids[i], ids[j]), std::max(ids[i], ids[j])});
                }
            }
        }
    }
    // Two distinct edges share at most one endpoint, so each pair arises once.
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> CriticalCliqueDecomposition::neighborhood(int k) const {
    std::vector<Vertex> out;
    for (const Vertex other : cc_graph.neighbors(k)) {
        out.insert(out.end(), cliques[other].begin(), cliques[other].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> CriticalCliqueDecomposition::second_neighborhood(int k) const {
    std::vector<char> near(cliques.size(), 0);
    near[k] = 1;
    for (const Vertex other : cc_graph.neighbors(k)) {
        near[other] = 1;
    }
    std::vector<char> taken(cliques.size(), 0);
    std::vector<Vertex> out;
    for (const Vertex mid : cc_graph.neighbors(k)) {
        for (const Vertex far : cc_graph.neighbors(mid)) {
            if (!near[far] && !taken[far]) {
                taken[far] = 1;
                out.insert(out.end(), cliques[far].begin(), cliques[far].end());
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CriticalCliqueDecomposition critical_cliques(const Graph& g) {
    const int n = g.num_vertices();
    CriticalCliqueDecomposition d;
    d.clique_of.assign(static_cast<std::size_t>(n), -1);

    // Group on the sorted closed neighborhood; vertices are visited in id
    // order, so clique indices come out ordered by their minimum member.
    std::map<std::vector<Vertex>, int> by_signature;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> closed(g.neighbors(v).begin(), g.neighbors(v).end());
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        const auto [it, inserted] = by_signature.try_emplace(std::move(closed), static_cast<int>(d.cliques.size()));
        if (inserted) {
            d.cliques.emplace_back();
        }
        d.cliques[it->second].push_back(v);
        d.clique_of[v] = it->second;
    }

    std::vector<std::pair<Vertex, Vertex>> cc_pairs;
    for (const auto& e : g.edges()) {
        const int a = d.clique_of[e.u];
        const int b = d.clique_of[e.v];
        if (a != b) {
            cc_pairs.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(cc_pairs.begin(), cc_pairs.end());
    cc_pairs.erase(std::unique(cc_pairs.begin(), cc_pairs.end()), cc_pairs.end());
    const int p = static_cast<int>(d.cliques.size());
    d.cc_graph = build_graph(p, cc_pairs);

    d.class_of.assign(static_cast<std::size_t>(p), CliqueClass::Closed);
    for (int k = 0; k < p; ++k) {
        const auto nk = d.neighborhood(k);
        bool clique = true;
        for (std::size_t i = 0; i < nk.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < nk.size(); ++j) {
                if (!g.has_edge(nk[i], nk[j])) {
                    clique = false;
                    break;
                }
            }
        }
        d.class_of[k] = clique ? CliqueClass::Closed : CliqueClass::Open;
    }
    return d;
}

} // namespace stc
