#include "stc/reductions/lift.hpp"

#include "stc/errors.hpp"

namespace stc {

LiftReduction lift_color(const MultiInstance& inst) {
    validate(inst);
    const Graph& g = inst.g;
    const int n = g.num_vertices();
    const int c = inst.c;
    const int size = inst.k + 1;

    LiftReduction red;
    LiftLayout& lay = red.layout;
    lay.original_vertices = n;
    int next = n;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : g.edges()) {
        pairs.emplace_back(e.u, e.v);
    }
    std::vector<Vertex> all_c;
    for (Vertex v = 0; v < n; ++v) {
        auto& part = lay.parts.emplace_back();
        for (int j = 0; j < size; ++j) {
            part.push_back(next);
            all_c.push_back(next);
            pairs.emplace_back(v, next);
            ++next;
        }
    }
    for (std::size_t i = 0; i < all_c.size(); ++i) {
        for (std::size_t j = i + 1; j < all_c.size(); ++j) {
            pairs.emplace_back(all_c[i], all_c[j]);
        }
    }
    for (int i = 0; i < c; ++i) {
        auto& u = lay.cliques.emplace_back();
        for (int j = 0; j < size; ++j) {
            u.push_back(next++);
        }
        for (std::size_t p = 0; p < u.size(); ++p) {
            for (std::size_t q = p + 1; q < u.size(); ++q) {
                pairs.emplace_back(u[p], u[q]);
            }
            for (const Vertex x : all_c) {
                pairs.emplace_back(u[p], x);
            }
        }
    }
    for (int i = 0; i < c; ++i) {
        auto& row = lay.pendants.emplace_back();
        for (int j = 0; j < c; ++j) {
            const Vertex p = next++;
            row.push_back(p);
            for (const Vertex x : lay.cliques[i]) {
                pairs.emplace_back(p, x);
            }
        }
    }
    red.instance = MultiInstance{build_graph(next, pairs), c + 1, inst.k};
    return red;
}

Labeling lift_labeling_forward(const LiftReduction& red, const MultiInstance& original, const Labeling& lab) {
    const Graph& g = original.g;
    const Graph& h = red.instance.g;
    const LiftLayout& lay = red.layout;
    const int c = original.c;
    if (static_cast<int>(lab.color_of.size()) != g.num_edges()) {
        throw ContractError("labeling does not match the original graph");
    }
    Labeling out = all_weak(h);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        out.color_of[*h.edge_id(ed.u, ed.v)] = lab.color_of[e];
    }
    std::vector<Vertex> all_c;
    for (Vertex v = 0; v < lay.original_vertices; ++v) {
        for (const Vertex x : lay.parts[v]) {
            out.color_of[*h.edge_id(v, x)] = c + 1;
            all_c.push_back(x);
        }
    }
    // E(C) and E(U_1) and E(C, U_1) form one clique of color 1.
    for (std::size_t i = 0; i < all_c.size(); ++i) {
        for (std::size_t j = i + 1; j < all_c.size(); ++j) {
            out.color_of[*h.edge_id(all_c[i], all_c[j])] = 1;
        }
    }
    for (int i = 1; i <= c; ++i) {
        const auto& u = lay.cliques[i - 1];
        for (std::size_t p = 0; p < u.size(); ++p) {
            for (std::size_t q = p + 1; q < u.size(); ++q) {
                out.color_of[*h.edge_id(u[p], u[q])] = i;
            }
            for (const Vertex x : all_c) {
                out.color_of[*h.edge_id(u[p], x)] = i;
            }
            for (int j = 1; j <= c; ++j) {
                out.color_of[*h.edge_id(u[p], lay.pendants[i - 1][j - 1])] = i == j ? c + 1 : j;
            }
        }
    }
    return out;
}

} // namespace stc
