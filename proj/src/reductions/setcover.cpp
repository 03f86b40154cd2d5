#include "stc/reductions/setcover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "stc/errors.hpp"

namespace stc {

void validate(const SetCoverInstance& sc) {
    std::set<int> seen;
    for (const int x : sc.universe) {
        if (!seen.insert(x).second) {
            throw ValidationError("universe repeats element " + std::to_string(x));
        }
    }
    for (std::size_t i = 0; i < sc.family.size(); ++i) {
        for (const int x : sc.family[i]) {
            if (!seen.count(x)) {
                throw ValidationError("set " + std::to_string(i + 1) + " contains " + std::to_string(x) +
                                      " which is not in the universe");
            }
        }
    }
}

SetCoverReduction reduce_setcover(const SetCoverInstance& sc) {
    validate(sc);
    const int f = static_cast<int>(sc.family.size());
    if (f == 0) {
        throw ValidationError("set family is empty");
    }
    if (sc.t < 0 || sc.t > f) {
        throw ValidationError("t must lie in 0.." + std::to_string(f));
    }
    const int u = static_cast<int>(sc.universe.size());
    SetCoverReduction red;
    SetCoverLayout& lay = red.layout;
    int next = 0;
    for (int i = 0; i < u; ++i) {
        lay.universe.push_back(next++);
    }
    for (int i = sc.t; i < f; ++i) {
        lay.pads.push_back(next++);
    }
    lay.selector = next++;

    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < u; ++i) {
        for (int j = i + 1; j < u; ++j) {
            pairs.emplace_back(lay.universe[i], lay.universe[j]);
        }
        pairs.emplace_back(lay.universe[i], lay.selector);
    }
    for (const Vertex z : lay.pads) {
        pairs.emplace_back(z, lay.selector);
    }

    VLInstance& inst = red.instance;
    inst.g = build_graph(next, pairs);
    inst.c = f + 1;
    inst.k = 0;
    inst.lambda.assign(static_cast<std::size_t>(next), ColorSet::full(f));
    std::map<int, int> index_of;
    for (int i = 0; i < u; ++i) {
        index_of[sc.universe[i]] = i;
        inst.lambda[lay.universe[i]] = ColorSet{f + 1};
    }
    for (int s = 0; s < f; ++s) {
        for (const int x : sc.family[s]) {
            inst.lambda[lay.universe[index_of[x]]].insert(s + 1);
        }
    }

    const Graph& g = inst.g;
    for (int i = 0; i < u; ++i) {
        for (int j = i + 1; j < u; ++j) {
            lay.clique_edges.push_back(*g.edge_id(lay.universe[i], lay.universe[j]));
        }
        lay.selector_edges.push_back(*g.edge_id(lay.universe[i], lay.selector));
    }
    for (const Vertex z : lay.pads) {
        lay.pad_edges.push_back(*g.edge_id(z, lay.selector));
    }
    return red;
}

Labeling setcover_labeling_from_cover(const SetCoverReduction& red, const SetCoverInstance& sc,
                                      const std::vector<int>& cover) {
    const int f = static_cast<int>(sc.family.size());
    std::vector<int> sets = cover;
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    if (static_cast<int>(sets.size()) > sc.t) {
        throw ContractError("cover is larger than t");
    }
    for (const int s : sets) {
        if (s < 0 || s >= f) {
            throw ContractError("cover names a set outside the family");
        }
    }
    const SetCoverLayout& lay = red.layout;
    const Graph& g = red.instance.g;
    Labeling lab = all_weak(g);
    for (const EdgeId e : lay.clique_edges) {
        lab.color_of[e] = f + 1;
    }
    // Colors not used by the cover go to the pad edges.
    std::vector<char> used(static_cast<std::size_t>(f), 0);
    for (const int s : sets) {
        used[s] = 1;
    }
    std::size_t pad = 0;
    for (int s = 0; s < f && pad < lay.pads.size(); ++s) {
        if (!used[s]) {
            lab.color_of[lay.pad_edges[pad++]] = s + 1;
        }
    }
    for (std::size_t i = 0; i < sc.universe.size(); ++i) {
        const int x = sc.universe[i];
        const auto it = std::find_if(sets.begin(), sets.end(), [&](int s) {
            return std::find(sc.family[s].begin(), sc.family[s].end(), x) != sc.family[s].end();
        });
        if (it == sets.end()) {
            throw ContractError("element " + std::to_string(x) + " is not covered");
        }
        lab.color_of[lay.selector_edges[i]] = *it + 1;
    }
    return lab;
}

SetCoverInstance reduce_is_to_setcover(const Graph& g, int s) {
    SetCoverInstance sc;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        sc.universe.push_back(e + 1);
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto& set = sc.family.emplace_back();
        for (const EdgeId e : g.incident_edges(v)) {
            set.push_back(e + 1);
        }
        std::sort(set.begin(), set.end());
    }
    sc.t = g.num_vertices() - s;
    return sc;
}

} // namespace stc
