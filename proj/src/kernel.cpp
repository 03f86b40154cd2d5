#include "stc/kernel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "stc/errors.hpp"
#include "stc/gallai.hpp"

namespace stc {

namespace {

std::vector<char> membership(int n, const std::vector<Vertex>& vs) {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (const Vertex v : vs) {
        in[v] = 1;
    }
    return in;
}

// Open neighborhood of a vertex set, ascending.
std::vector<Vertex> outer_neighbors(const Graph& g, const std::vector<Vertex>& set) {
    const auto in = membership(g.num_vertices(), set);
    std::set<Vertex> out;
    for (const Vertex v : set) {
        for (const Vertex u : g.neighbors(v)) {
            if (!in[u]) {
                out.insert(u);
            }
        }
    }
    return {out.begin(), out.end()};
}

// Edges from v to vertices outside K and N(K).
std::vector<EdgeId> far_edges(const Graph& g, Vertex v, const std::vector<char>& near) {
    std::vector<EdgeId> out;
    const auto nbrs = g.neighbors(v);
    const auto ids = g.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (!near[nbrs[i]]) {
            out.push_back(ids[i]);
        }
    }
    return out;
}

bool is_closed_critical_clique(const Graph& g, const std::vector<Vertex>& clique) {
    if (clique.empty()) {
        return false;
    }
    const auto d = critical_cliques(g);
    const int k = d.clique_of[clique.front()];
    return d.cliques[k] == clique && d.class_of[k] == CliqueClass::Closed;
}

ELInstance delete_vertices(const ELInstance& inst, const std::vector<char>& gone, std::vector<Vertex>& vertex_map) {
    const Graph& g = inst.g;
    vertex_map.assign(static_cast<std::size_t>(g.num_vertices()), -1);
    int next = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!gone[v]) {
            vertex_map[v] = next++;
        }
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    ELInstance out;
    out.c = inst.c;
    out.k = inst.k;
    // The renumbering is monotone, so surviving edges keep their relative order.
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (!gone[ed.u] && !gone[ed.v]) {
            pairs.emplace_back(vertex_map[ed.u], vertex_map[ed.v]);
            out.psi.push_back(inst.psi[e]);
        }
    }
    out.g = build_graph(next, pairs);
    return out;
}

} // namespace

int tau(const ELInstance& inst) {
    std::set<ColorSet> lists;
    for (const auto& list : inst.psi) {
        if (!list.empty()) {
            lists.insert(list);
        }
    }
    return static_cast<int>(lists.size());
}

int boundary_edge_count(const Graph& g, const std::vector<Vertex>& clique) {
    const std::vector<Vertex> first = outer_neighbors(g, clique);
    std::vector<Vertex> near_set = clique;
    near_set.insert(near_set.end(), first.begin(), first.end());
    const auto near = membership(g.num_vertices(), near_set);
    int count = 0;
    for (const Vertex v : first) {
        count += static_cast<int>(far_edges(g, v, near).size());
    }
    return count;
}

CliqueReduction reduce_closed_clique(const ELInstance& inst, const std::vector<Vertex>& clique) {
    const Graph& g = inst.g;
    if (!is_closed_critical_clique(g, clique)) {
        throw ContractError("reduction needs a closed critical clique");
    }
    RuleApplication rec;
    rec.clique = clique;
    rec.tau = tau(inst);
    rec.boundary_edges = boundary_edge_count(g, clique);
    if (static_cast<std::int64_t>(clique.size()) <= static_cast<std::int64_t>(rec.tau) * rec.boundary_edges) {
        throw ContractError("clique of size " + std::to_string(clique.size()) + " is within tau * " +
                            std::to_string(rec.boundary_edges));
    }

    const std::vector<Vertex> first = outer_neighbors(g, clique);
    std::vector<Vertex> near_set = clique;
    near_set.insert(near_set.end(), first.begin(), first.end());
    const auto near = membership(g.num_vertices(), near_set);

    std::vector<char> important(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const Vertex v : first) {
        const int limit = static_cast<int>(far_edges(g, v, near).size());
        std::set<ColorSet> lists;
        for (const Vertex w : clique) {
            const ColorSet& list = inst.psi[*g.edge_id(v, w)];
            if (!list.empty()) {
                lists.insert(list);
            }
        }
        for (const ColorSet& list : lists) {
            int marked = 0;
            for (const Vertex w : clique) {
                if (marked == limit) {
                    break;
                }
                if (inst.psi[*g.edge_id(v, w)] == list) {
                    important[w] = 1;
                    ++marked;
                }
            }
        }
    }

    std::vector<char> gone(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const Vertex w : clique) {
        if (important[w]) {
            rec.important.push_back(w);
        } else {
            rec.deleted_vertices.push_back(w);
            gone[w] = 1;
        }
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (gone[ed.u] || gone[ed.v]) {
            rec.deleted_edges.push_back(e);
            if (inst.psi[e].empty()) {
                rec.empty_list_deleted.push_back(e);
            }
        }
    }
    rec.budget_decrement = static_cast<int>(rec.empty_list_deleted.size());

    CliqueReduction out;
    out.reduced = delete_vertices(inst, gone, rec.vertex_map);
    out.reduced.k = inst.k - rec.budget_decrement;
    rec.before = inst;
    out.record = std::move(rec);
    return out;
}

ELInstance trivial_no_instance(int c) {
    return ELInstance{build_graph(3, {{0, 1}, {1, 2}}), std::max(c, 1), 0, {ColorSet{1}, ColorSet{1}}};
}

KernelResult kernelize(const ELInstance& input, const KernelOptions& options) {
    validate(input);
    KernelResult result;
    result.trace.tau = tau(input);
    ELInstance cur = input;

    if (options.normalize_empty_cc) {
        const auto d = critical_cliques(cur.g);
        for (EdgeId e = 0; e < cur.g.num_edges(); ++e) {
            const Edge& ed = cur.g.edge(e);
            if (cur.psi[e].empty() && d.clique_of[ed.u] == d.clique_of[ed.v]) {
                cur.psi[e] = ColorSet{1};
                --cur.k;
                result.trace.normalized_edges.push_back(e);
            }
        }
    }

    while (cur.k >= 0) {
        const auto d = critical_cliques(cur.g);
        const int t = tau(cur);
        std::optional<std::size_t> target;
        for (std::size_t i = 0; i < d.cliques.size(); ++i) {
            if (d.class_of[i] != CliqueClass::Closed) {
                continue;
            }
            const auto size = static_cast<std::int64_t>(d.cliques[i].size());
            if (size > static_cast<std::int64_t>(t) * boundary_edge_count(cur.g, d.cliques[i])) {
                target = i;
                break;
            }
        }
        if (!target) {
            break;
        }
        CliqueReduction step = reduce_closed_clique(cur, d.cliques[*target]);
        cur = std::move(step.reduced);
        result.trace.applications.push_back(std::move(step.record));
    }

    if (cur.k < 0) {
        result.trace.trivially_no = true;
        cur = trivial_no_instance(input.c);
    }
    result.reduced = std::move(cur);
    result.reduced_tau = tau(result.reduced);
    result.reduced_k1 = k1(result.reduced.g).k1;
    result.bound = static_cast<std::int64_t>(result.reduced_tau + 1) * 2 * result.reduced_k1;
    return result;
}

namespace {

// Extends a witness for the instance after `rec` to the instance before it.
Labeling lift_step(const RuleApplication& rec, const ELInstance& after, const Labeling& lab) {
    const ELInstance& before = rec.before;
    const Graph& g = before.g;
    Labeling out{std::vector<Color>(static_cast<std::size_t>(g.num_edges()), 0)};
    std::vector<char> deleted_edge(static_cast<std::size_t>(g.num_edges()), 0);
    for (const EdgeId e : rec.deleted_edges) {
        deleted_edge[e] = 1;
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!deleted_edge[e]) {
            const Edge& ed = g.edge(e);
            out.color_of[e] = lab.color_of[*after.g.edge_id(rec.vertex_map[ed.u], rec.vertex_map[ed.v])];
        }
    }

    const auto in_clique = membership(g.num_vertices(), rec.clique);
    const auto gone = membership(g.num_vertices(), rec.deleted_vertices);
    const std::vector<Vertex> first = outer_neighbors(g, rec.clique);
    std::vector<Vertex> near_set = rec.clique;
    near_set.insert(near_set.end(), first.begin(), first.end());
    const auto near = membership(g.num_vertices(), near_set);

    // Clique-internal edges sit in no induced P3; any listed color is fine.
    for (const EdgeId e : rec.deleted_edges) {
        const Edge& ed = g.edge(e);
        if (in_clique[ed.u] && in_clique[ed.v] && !before.psi[e].empty()) {
            out.color_of[e] = before.psi[e].min();
        }
    }

    for (const Vertex v : first) {
        // Deleted edges to v grouped by list.
        std::map<ColorSet, std::vector<EdgeId>> groups;
        for (const Vertex u : rec.deleted_vertices) {
            const EdgeId e = *g.edge_id(u, v);
            if (!before.psi[e].empty()) {
                groups[before.psi[e]].push_back(e);
            }
        }
        const std::vector<EdgeId> far = far_edges(g, v, near);
        for (const auto& [list, edges] : groups) {
            std::set<Color> used;
            for (const EdgeId f : far) {
                used.insert(out.color_of[f]);
            }
            std::optional<Color> free;
            for (const Color x : list) {
                if (!used.count(x)) {
                    free = x;
                    break;
                }
            }
            if (!free) {
                // Every listed color appears on v's far edges, so the kept
                // same-list edges to v are all weak. Moving them to one color
                // and weakening that color's far edges costs nothing extra.
                const Color x = list.min();
                for (const EdgeId f : far) {
                    if (out.color_of[f] == x) {
                        out.color_of[f] = 0;
                    }
                }
                for (const Vertex y : rec.clique) {
                    if (gone[y]) {
                        continue;
                    }
                    const EdgeId e = *g.edge_id(v, y);
                    if (before.psi[e] == list) {
                        out.color_of[e] = x;
                    }
                }
                free = x;
            }
            for (const EdgeId e : edges) {
                out.color_of[e] = *free;
            }
        }
    }
    return out;
}

} // namespace

Labeling lift_labeling(const KernelResult& result, const Labeling& reduced_witness) {
    if (result.trace.trivially_no) {
        throw ContractError("a trivially-no kernel has no witness to lift");
    }
    Labeling lab = reduced_witness;
    const auto& apps = result.trace.applications;
    for (std::size_t i = apps.size(); i-- > 0;) {
        const ELInstance& after = i + 1 < apps.size() ? apps[i + 1].before : result.reduced;
        lab = lift_step(apps[i], after, lab);
    }
    for (const EdgeId e : result.trace.normalized_edges) {
        lab.color_of[e] = 0;
    }
    return lab;
}

} // namespace stc
