#include "stc/reductions/nae.hpp"

#include "stc/errors.hpp"

namespace stc {

namespace {

// Clause-gadget labeling for connector colors (1, 2, weak) on (b[0], b[1], b[2]).
// Rows a_1, a_2; columns b_1..b_3.
constexpr std::array<std::array<Color, 3>, 2> kIdentityPattern{{{2, 0, 1}, {0, 1, 2}}};

} // namespace

NaeReduction reduce_nae3sat(const CnfFormula& input) {
    validate(input);
    if (input.clauses.empty()) {
        throw ValidationError("formula has no clauses");
    }
    CnfFormula f = input;
    for (std::size_t i = 0; f.clauses.size() < 3; ++i) {
        f.clauses.push_back(input.clauses[i % input.clauses.size()]);
    }
    const int m = static_cast<int>(f.clauses.size());
    const int len = 2 * m;

    NaeLayout layout;
    layout.formula = f;
    layout.cycle_length = len;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    int next = 0;
    for (int x = 0; x < f.num_vars; ++x) {
        NaeVariableGadget gad;
        for (int i = 0; i < len; ++i) {
            gad.cycle.push_back(next++);
        }
        for (int i = 1; i <= len; ++i) {
            const Vertex c = next++;
            gad.middle.push_back(c);
            const Vertex p = gad.cycle[i - 1];
            const Vertex q = gad.cycle[i % len];
            pairs.emplace_back(p, q);
            pairs.emplace_back(c, p);
            pairs.emplace_back(c, q);
        }
        layout.variables.push_back(std::move(gad));
    }

    // Next unused odd / even middle index per variable.
    std::vector<int> next_odd(static_cast<std::size_t>(f.num_vars), 1);
    std::vector<int> next_even(static_cast<std::size_t>(f.num_vars), 2);
    for (const Clause& cl : f.clauses) {
        NaeClauseGadget gad;
        for (auto& v : gad.a) {
            v = next++;
        }
        for (auto& v : gad.b) {
            v = next++;
        }
        for (const Vertex a : gad.a) {
            for (const Vertex b : gad.b) {
                pairs.emplace_back(a, b);
            }
        }
        for (int p = 0; p < 3; ++p) {
            const Literal& lit = cl[p];
            int& slot = lit.positive ? next_even[lit.var] : next_odd[lit.var];
            gad.attached_index[p] = slot;
            gad.attached[p] = layout.variables[lit.var].middle[slot - 1];
            slot += 2;
            pairs.emplace_back(gad.b[p], gad.attached[p]);
        }
        layout.clauses.push_back(gad);
    }

    NaeReduction red;
    red.instance = MultiInstance{build_graph(next, pairs), 2, 3 * m};
    for (auto& gad : layout.clauses) {
        for (int p = 0; p < 3; ++p) {
            gad.connector[p] = *red.instance.g.edge_id(gad.b[p], gad.attached[p]);
        }
    }
    red.layout = std::move(layout);
    return red;
}

Labeling nae_labeling_from_assignment(const NaeReduction& red, const Assignment& a) {
    const NaeLayout& lay = red.layout;
    const CnfFormula& f = lay.formula;
    if (static_cast<int>(a.size()) != f.num_vars || !nae_satisfies(f, a)) {
        throw ContractError("assignment does not NAE-satisfy the formula");
    }
    const Graph& g = red.instance.g;
    Labeling lab = all_weak(g);
    const int len = lay.cycle_length;
    for (int x = 0; x < f.num_vars; ++x) {
        const auto& gad = lay.variables[x];
        for (int i = 1; i <= len; ++i) {
            // True: odd triangles 1, even triangles 2. False swaps them.
            const Color col = ((i % 2 == 1) == a[x]) ? 1 : 2;
            const Vertex c = gad.middle[i - 1];
            const Vertex p = gad.cycle[i - 1];
            const Vertex q = gad.cycle[i % len];
            lab.color_of[*g.edge_id(p, q)] = col;
            lab.color_of[*g.edge_id(c, p)] = col;
            lab.color_of[*g.edge_id(c, q)] = col;
        }
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const Clause& cl = f.clauses[j];
        const auto& gad = lay.clauses[j];
        int t = -1;
        int u = -1;
        for (int p = 0; p < 3; ++p) {
            if (literal_true(cl[p], a)) {
                t = t < 0 ? p : t;
            } else {
                u = u < 0 ? p : u;
            }
        }
        const int w = 3 - t - u;
        // Column order of the pattern: the 1-connector, the 2-connector, the weak one.
        const std::array<int, 3> col_of_pattern{t, u, w};
        lab.color_of[gad.connector[t]] = 1;
        lab.color_of[gad.connector[u]] = 2;
        lab.color_of[gad.connector[w]] = 0;
        for (int r = 0; r < 2; ++r) {
            for (int s = 0; s < 3; ++s) {
                lab.color_of[*g.edge_id(gad.a[r], gad.b[col_of_pattern[s]])] = kIdentityPattern[r][s];
            }
        }
    }
    return lab;
}

IsolatedClauseGadget isolated_clause_gadget() {
    // a_1 = 0, a_2 = 1, b = 2..4, stubs 5..7.
    const Graph g = build_graph(8, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}});
    IsolatedClauseGadget out;
    out.instance = normalize(MultiInstance{g, 2, 3});
    out.connector = {*g.edge_id(2, 5), *g.edge_id(3, 6), *g.edge_id(4, 7)};
    return out;
}

} // namespace stc
