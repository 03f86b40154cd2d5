#include "stc/gallai.hpp"

#include <algorithm>
#include <numeric>

namespace stc {

GallaiGraph gallai_graph(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& p : induced_p3s(g)) {
        pairs.emplace_back(p.first, p.second);
    }
    GallaiGraph out;
    out.base = build_graph(g.num_edges(), pairs);
    out.to_edge.resize(static_cast<std::size_t>(g.num_edges()));
    std::iota(out.to_edge.begin(), out.to_edge.end(), 0);
    out.from_edge = out.to_edge;
    return out;
}

namespace {

// Bounded search tree on a residual graph given by an alive mask.
class CoverSearch {
public:
    explicit CoverSearch(const Graph& g) : g_(g) {}

    // Smallest cover of the alive part with size <= budget, or nullopt.
    std::optional<std::vector<Vertex>> solve(std::vector<char> alive, int budget) {
        best_.reset();
        best_size_ = budget + 1;
        std::vector<Vertex> taken;
        recurse(alive, taken);
        return best_;
    }

private:
    int alive_degree(const std::vector<char>& alive, Vertex v) const {
        int d = 0;
        for (const Vertex u : g_.neighbors(v)) {
            d += alive[u];
        }
        return d;
    }

    void take(std::vector<char>& alive, std::vector<Vertex>& taken, Vertex v) const {
        alive[v] = 0;
        taken.push_back(v);
    }

    void recurse(std::vector<char> alive, std::vector<Vertex> taken) {
        const int n = g_.num_vertices();
        // Degree-0 vertices drop out; a degree-1 vertex's neighbor is taken.
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex v = 0; v < n; ++v) {
                if (!alive[v]) {
                    continue;
                }
                const int d = alive_degree(alive, v);
                if (d == 0) {
                    alive[v] = 0;
                    changed = true;
                } else if (d == 1) {
                    for (const Vertex u : g_.neighbors(v)) {
                        if (alive[u]) {
                            take(alive, taken, u);
                            break;
                        }
                    }
                    alive[v] = 0;
                    changed = true;
                }
            }
            if (static_cast<int>(taken.size()) >= best_size_) {
                return;
            }
        }

        Vertex pivot = -1;
        int max_deg = 0;
        int edges2 = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[v]) {
                continue;
            }
            const int d = alive_degree(alive, v);
            edges2 += d;
            if (d > max_deg) {
                max_deg = d;
                pivot = v;
            }
        }
        if (pivot < 0) {
            best_size_ = static_cast<int>(taken.size());
            best_ = taken;
            return;
        }
        const int room = best_size_ - 1 - static_cast<int>(taken.size());
        // Each cover vertex covers at most max_deg of the remaining edges.
        if (room <= 0 || static_cast<long long>(room) * max_deg < edges2 / 2) {
            return;
        }

        {
            auto a = alive;
            auto t = taken;
            take(a, t, pivot);
            recurse(std::move(a), std::move(t));
        }
        if (max_deg <= best_size_ - 1 - static_cast<int>(taken.size())) {
            auto a = alive;
            auto t = taken;
            for (const Vertex u : g_.neighbors(pivot)) {
                if (a[u]) {
                    take(a, t, u);
                }
            }
            a[pivot] = 0;
            recurse(std::move(a), std::move(t));
        }
    }

    const Graph& g_;
    std::optional<std::vector<Vertex>> best_;
    int best_size_ = 0;
};

} // namespace

std::optional<std::vector<Vertex>> min_vertex_cover(const Graph& g, std::optional<int> upper_bound) {
    const int n = g.num_vertices();
    const int limit = upper_bound ? *upper_bound : n;
    if (limit < 0) {
        return std::nullopt;
    }
    CoverSearch search(g);
    const auto first = search.solve(std::vector<char>(static_cast<std::size_t>(n), 1), limit);
    if (!first) {
        return std::nullopt;
    }
    const int size = static_cast<int>(first->size());

    // Lexicographically smallest cover of that size: decide vertices in id
    // order, taking v whenever a cover of the right size still exists.
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<Vertex> chosen;
    int budget = size;
    for (Vertex v = 0; v < n; ++v) {
        if (!alive[v]) {
            continue;
        }
        bool has_edge = false;
        for (const Vertex u : g.neighbors(v)) {
            if (alive[u]) {
                has_edge = true;
                break;
            }
        }
        if (budget > 0) {
            auto with_v = alive;
            with_v[v] = 0;
            if (search.solve(with_v, budget - 1)) {
                chosen.push_back(v);
                alive = std::move(with_v);
                --budget;
                continue;
            }
        }
        if (has_edge) {
            // v stays out, so all its remaining neighbors are forced in.
            for (const Vertex u : g.neighbors(v)) {
                if (alive[u]) {
                    alive[u] = 0;
                    chosen.push_back(u);
                    --budget;
                }
            }
        }
        alive[v] = 0;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

K1Result k1(const Graph& g) {
    const auto gallai = gallai_graph(g);
    K1Result r;
    r.cover = *min_vertex_cover(gallai.base);
    r.k1 = static_cast<int>(r.cover.size());
    std::vector<char> in_cover(static_cast<std::size_t>(g.num_edges()), 0);
    for (const Vertex v : r.cover) {
        in_cover[v] = 1;
    }
    for (Vertex v = 0; v < g.num_edges(); ++v) {
        if (!in_cover[v]) {
            r.independent.push_back(v);
        }
    }
    return r;
}

} // namespace stc
