#include "stc/reductions/eth.hpp"

#include <algorithm>
#include <set>

#include "stc/errors.hpp"

namespace stc {

namespace {

int ceil_sqrt(int n) {
    int q = 0;
    while (q * q < n) {
        ++q;
    }
    return q;
}

void add_clique(const std::vector<Vertex>& vs, std::vector<std::pair<Vertex, Vertex>>& pairs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            pairs.emplace_back(vs[i], vs[j]);
        }
    }
}

// Proper coloring of h into `classes` classes of size at most `cap`. Vertices
// in id order, candidate classes by (load, index); backtracks when stuck.
class CappedColoring {
public:
    CappedColoring(const Graph& h, int classes, int cap)
        : h_(h), cap_(cap), color_(static_cast<std::size_t>(h.num_vertices()), -1),
          load_(static_cast<std::size_t>(classes), 0) {}

    std::vector<int> run() {
        if (!place(0)) {
            throw ContractError("no capped coloring of the clause conflict graph");
        }
        return color_;
    }

private:
    bool place(Vertex v) {
        if (v == h_.num_vertices()) {
            return true;
        }
        std::vector<int> order;
        for (int k = 0; k < static_cast<int>(load_.size()); ++k) {
            if (load_[k] >= cap_) {
                continue;
            }
            bool clash = false;
            for (const Vertex u : h_.neighbors(v)) {
                clash = clash || color_[u] == k;
            }
            if (!clash) {
                order.push_back(k);
            }
        }
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return load_[a] < load_[b]; });
        for (const int k : order) {
            color_[v] = k;
            ++load_[k];
            if (place(v + 1)) {
                return true;
            }
            --load_[k];
            color_[v] = -1;
        }
        return false;
    }

    const Graph& h_;
    int cap_;
    std::vector<int> color_;
    std::vector<int> load_;
};

ELInstance normalized(const EthReduction& red) { return normalize(red.instance); }

} // namespace

ColorSet EthLayout::clause_variable_colors(int j) const {
    ColorSet out;
    for (int p = 0; p < 3; ++p) {
        const Literal& lit = formula.clauses[j][p];
        out.insert(t_color(lit.var, omega[j][p]));
        out.insert(f_color(lit.var, omega[j][p]));
    }
    return out;
}

ColorSet EthLayout::clause_literal_colors(int j) const {
    ColorSet out;
    for (int p = 0; p < 3; ++p) {
        const Literal& lit = formula.clauses[j][p];
        out.insert(lit.positive ? t_color(lit.var, omega[j][p]) : f_color(lit.var, omega[j][p]));
    }
    return out;
}

EthReduction reduce_3sat_eth(const CnfFormula& f) {
    validate(f);
    const auto occ = f.occurrences();
    for (int i = 0; i < f.num_vars; ++i) {
        if (occ[i] > 4) {
            throw ValidationError("variable " + std::to_string(i + 1) + " occurs in " + std::to_string(occ[i]) +
                                  " clauses; at most 4 allowed");
        }
    }
    const int n = f.num_vars;
    const int m = static_cast<int>(f.clauses.size());

    EthReduction red;
    EthLayout& lay = red.layout;
    lay.formula = f;
    const int q = ceil_sqrt(n);
    lay.root = q;

    // Occurrence numbers.
    lay.omega.resize(static_cast<std::size_t>(m));
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < m; ++j) {
        for (int p = 0; p < 3; ++p) {
            lay.omega[j][p] = ++seen[f.clauses[j][p].var];
        }
    }

    // H^X and its greedy coloring.
    std::set<std::pair<Vertex, Vertex>> hx_pairs;
    for (const Clause& cl : f.clauses) {
        for (int p = 0; p < 3; ++p) {
            for (int s = p + 1; s < 3; ++s) {
                hx_pairs.emplace(std::min(cl[p].var, cl[s].var), std::max(cl[p].var, cl[s].var));
            }
        }
    }
    lay.variable_conflicts = build_graph(n, std::vector<std::pair<Vertex, Vertex>>(hx_pairs.begin(), hx_pairs.end()));
    lay.variable_color.assign(static_cast<std::size_t>(n), -1);
    for (Vertex v = 0; v < n; ++v) {
        std::array<bool, 9> used{};
        for (const Vertex u : lay.variable_conflicts.neighbors(v)) {
            if (lay.variable_color[u] >= 0) {
                used[lay.variable_color[u]] = true;
            }
        }
        const auto free = std::find(used.begin(), used.end(), false);
        if (free == used.end()) {
            throw ContractError("greedy coloring of the variable conflict graph needs more than 9 colors");
        }
        lay.variable_color[v] = static_cast<int>(free - used.begin());
    }

    // Groups: each color class cut into chunks of at most q variables.
    lay.down_x.assign(static_cast<std::size_t>(n), 0);
    for (int col = 0; col < 9; ++col) {
        std::vector<int> cls;
        for (int v = 0; v < n; ++v) {
            if (lay.variable_color[v] == col) {
                cls.push_back(v);
            }
        }
        for (std::size_t s = 0; s < cls.size(); s += static_cast<std::size_t>(q)) {
            auto& grp = lay.groups.emplace_back();
            for (std::size_t t = s; t < std::min(cls.size(), s + static_cast<std::size_t>(q)); ++t) {
                grp.push_back(cls[t]);
                lay.down_x[cls[t]] = static_cast<int>(lay.groups.size());
            }
        }
    }
    lay.up_x = lay.down_x;
    lay.mid_x.assign(static_cast<std::size_t>(n), 0);
    {
        std::vector<int> count(lay.groups.size() + 1, 0);
        for (int v = 0; v < n; ++v) {
            lay.mid_x[v] = ++count[lay.down_x[v]];
        }
    }

    // H^C: clauses meeting a common group.
    std::vector<std::pair<Vertex, Vertex>> hc_pairs;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            bool meet = false;
            for (const Literal& a : f.clauses[i]) {
                for (const Literal& b : f.clauses[j]) {
                    meet = meet || lay.down_x[a.var] == lay.down_x[b.var];
                }
            }
            if (meet) {
                hc_pairs.emplace_back(i, j);
            }
        }
    }
    lay.clause_conflicts = build_graph(m, hc_pairs);
    const int classes = 12 * q + 1;
    const std::vector<int> cls = CappedColoring(lay.clause_conflicts, classes, q).run();
    lay.up_c.resize(static_cast<std::size_t>(m));
    lay.down_c.resize(static_cast<std::size_t>(m));
    {
        std::vector<int> count(static_cast<std::size_t>(classes) + 1, 0);
        for (int j = 0; j < m; ++j) {
            lay.up_c[j] = cls[j] + 1;
            lay.down_c[j] = ++count[lay.up_c[j]];
        }
    }

    // Vertices, layer by layer.
    int next = 0;
    int p = 0;
    for (int r = 1; r <= 4; ++r) {
        for (int r2 = 1; r2 <= 4; ++r2) {
            if (r != r2) {
                lay.pairs[p++] = {r, r2};
            }
        }
    }
    std::vector<Vertex> ux;
    lay.alpha.resize(12);
    for (auto& row : lay.alpha) {
        for (int t = 0; t < q + 9; ++t) {
            row.push_back(next);
            ux.push_back(next++);
        }
    }
    for (auto& row : lay.gamma) {
        for (int t = 0; t < q; ++t) {
            row.push_back(next++);
        }
    }
    for (int t = 0; t < q + 9; ++t) {
        lay.delta.push_back(next++);
    }
    for (int t = 0; t < classes; ++t) {
        lay.eta.push_back(next++);
    }
    for (int t = 0; t < q; ++t) {
        lay.theta.push_back(next++);
    }

    std::vector<std::pair<Vertex, Vertex>> pairs;
    add_clique(ux, pairs);
    add_clique(lay.delta, pairs);
    add_clique(lay.eta, pairs);
    add_clique(lay.theta, pairs);
    for (int i = 0; i < n; ++i) {
        for (int r = 1; r <= 4; ++r) {
            pairs.emplace_back(lay.gamma[r - 1][lay.mid_x[i] - 1], lay.delta[lay.down_x[i] - 1]);
        }
        for (int s = 0; s < 12; ++s) {
            const auto [r, r2] = lay.pairs[s];
            const Vertex a = lay.alpha[s][lay.up_x[i] - 1];
            pairs.emplace_back(a, lay.gamma[r - 1][lay.mid_x[i] - 1]);
            pairs.emplace_back(a, lay.gamma[r2 - 1][lay.mid_x[i] - 1]);
        }
    }
    for (int j = 0; j < m; ++j) {
        const Vertex e = lay.eta[lay.up_c[j] - 1];
        pairs.emplace_back(e, lay.theta[lay.down_c[j] - 1]);
        for (const Literal& lit : f.clauses[j]) {
            pairs.emplace_back(lay.delta[lay.down_x[lit.var] - 1], e);
        }
    }

    VLInstance& inst = red.instance;
    try {
        inst.g = build_graph(next, pairs);
    } catch (const ValidationError& e) {
        throw ContractError(std::string("layered construction produced a repeated edge: ") + e.what());
    }
    inst.c = 9 * n + 4;
    inst.k = 0;
    inst.lambda.assign(static_cast<std::size_t>(next), ColorSet{});
    for (const auto& row : lay.alpha) {
        for (const Vertex v : row) {
            inst.lambda[v].insert(lay.z_color(1));
        }
    }
    for (const Vertex v : lay.delta) {
        inst.lambda[v].insert(lay.z_color(2));
    }
    for (const Vertex v : lay.eta) {
        inst.lambda[v].insert(lay.z_color(3));
    }
    for (const Vertex v : lay.theta) {
        inst.lambda[v].insert(lay.z_color(4));
    }
    for (int i = 0; i < n; ++i) {
        for (int r = 1; r <= 4; ++r) {
            ColorSet& g = inst.lambda[lay.gamma[r - 1][lay.mid_x[i] - 1]];
            g.insert(lay.t_color(i, r));
            g.insert(lay.f_color(i, r));
            g.insert(lay.r_color(i));
            ColorSet& d = inst.lambda[lay.delta[lay.down_x[i] - 1]];
            d.insert(lay.t_color(i, r));
            d.insert(lay.f_color(i, r));
        }
        for (int s = 0; s < 12; ++s) {
            const auto [r, r2] = lay.pairs[s];
            ColorSet& a = inst.lambda[lay.alpha[s][lay.up_x[i] - 1]];
            a.insert(lay.t_color(i, r));
            a.insert(lay.f_color(i, r2));
            a.insert(lay.r_color(i));
        }
    }
    for (int j = 0; j < m; ++j) {
        ColorSet& e = inst.lambda[lay.eta[lay.up_c[j] - 1]];
        e = e.unite(lay.clause_variable_colors(j));
        ColorSet& t = inst.lambda[lay.theta[lay.down_c[j] - 1]];
        t = t.unite(lay.clause_literal_colors(j));
    }
    return red;
}

std::vector<ClaimCheck> eth_claims(const EthReduction& red) {
    const EthLayout& lay = red.layout;
    const CnfFormula& f = lay.formula;
    const auto& lambda = red.instance.lambda;
    const int n = f.num_vars;
    const int m = static_cast<int>(f.clauses.size());
    const int q = lay.root;
    auto meet = [&](Vertex u, Vertex v) { return lambda[u].intersect(lambda[v]); };
    std::vector<ClaimCheck> out;

    bool ok = static_cast<int>(lay.groups.size()) <= q + 9;
    for (const auto& grp : lay.groups) {
        ok = ok && static_cast<int>(grp.size()) <= q;
    }
    out.push_back({"Groupsizes", ok});

    ok = true;
    for (const Clause& cl : f.clauses) {
        ok = ok && lay.down_x[cl[0].var] != lay.down_x[cl[1].var] && lay.down_x[cl[0].var] != lay.down_x[cl[2].var] &&
             lay.down_x[cl[1].var] != lay.down_x[cl[2].var];
    }
    out.push_back({"Different variable downs", ok});

    ok = true;
    bool ups = true;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            ok = ok && (lay.mid_x[i] != lay.mid_x[j] || lay.down_x[i] != lay.down_x[j]);
            ups = ups && (lay.mid_x[i] != lay.mid_x[j] || lay.up_x[i] != lay.up_x[j]);
        }
    }
    out.push_back({"Representing edges not equal", ok});
    out.push_back({"Different variable ups", ups});

    ok = true;
    bool sound_t = true;
    bool sound_f = true;
    for (int i = 0; i < n; ++i) {
        const Vertex d = lay.delta[lay.down_x[i] - 1];
        for (int r = 1; r <= 4; ++r) {
            const Vertex g = lay.gamma[r - 1][lay.mid_x[i] - 1];
            ok = ok && meet(g, d) == ColorSet{lay.t_color(i, r), lay.f_color(i, r)};
        }
        for (int s = 0; s < 12; ++s) {
            const auto [r, r2] = lay.pairs[s];
            const Vertex a = lay.alpha[s][lay.up_x[i] - 1];
            sound_t = sound_t && meet(a, lay.gamma[r - 1][lay.mid_x[i] - 1]) ==
                                     ColorSet{lay.t_color(i, r), lay.r_color(i)};
            sound_f = sound_f && meet(a, lay.gamma[r2 - 1][lay.mid_x[i] - 1]) ==
                                     ColorSet{lay.f_color(i, r2), lay.r_color(i)};
        }
    }
    out.push_back({"Edge Colors Variable Representer", ok});
    out.push_back({"Edge Colors Variable Soundness (T, R)", sound_t});
    out.push_back({"Edge Colors Variable Soundness (F, R)", sound_f});

    ok = true;
    bool distinct = true;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            bool share = false;
            for (const Literal& a : f.clauses[i]) {
                for (const Literal& b : f.clauses[j]) {
                    share = share || lay.down_x[a.var] == lay.down_x[b.var];
                }
            }
            ok = ok && (!share || lay.up_c[i] != lay.up_c[j]);
            distinct = distinct && (lay.up_c[i] != lay.up_c[j] || lay.down_c[i] != lay.down_c[j]);
        }
    }
    out.push_back({"Different clause ups", ok});
    out.push_back({"Clause edges not equal", distinct});

    ok = true;
    bool conn = true;
    for (int j = 0; j < m; ++j) {
        const Vertex e = lay.eta[lay.up_c[j] - 1];
        ok = ok && meet(e, lay.theta[lay.down_c[j] - 1]) == lay.clause_literal_colors(j);
        for (int p = 0; p < 3; ++p) {
            const int i = f.clauses[j][p].var;
            const int w = lay.omega[j][p];
            conn = conn && meet(lay.delta[lay.down_x[i] - 1], e) == ColorSet{lay.t_color(i, w), lay.f_color(i, w)};
        }
    }
    out.push_back({"Edge Colors Clauses", ok});
    out.push_back({"Edge Colors Connection", conn});

    ok = true;
    std::vector<int> load(static_cast<std::size_t>(12 * q + 2), 0);
    for (int j = 0; j < m; ++j) {
        ok = ok && ++load[lay.up_c[j]] <= q;
        for (const Vertex u : lay.clause_conflicts.neighbors(j)) {
            ok = ok && lay.up_c[u] != lay.up_c[j];
        }
    }
    out.push_back({"Clause classes proper and capped", ok});
    return out;
}

Labeling eth_labeling_from_assignment(const EthReduction& red, const Assignment& a) {
    const EthLayout& lay = red.layout;
    const CnfFormula& f = lay.formula;
    if (static_cast<int>(a.size()) != f.num_vars || !satisfies(f, a)) {
        throw ContractError("assignment does not satisfy the formula");
    }
    const Graph& g = red.instance.g;
    Labeling lab = all_weak(g);
    auto set = [&](Vertex u, Vertex v, Color x) { lab.color_of[*g.edge_id(u, v)] = x; };
    auto fill = [&](const std::vector<Vertex>& vs, Color x) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                set(vs[i], vs[j], x);
            }
        }
    };
    std::vector<Vertex> ux;
    for (const auto& row : lay.alpha) {
        ux.insert(ux.end(), row.begin(), row.end());
    }
    fill(ux, lay.z_color(1));
    fill(lay.delta, lay.z_color(2));
    fill(lay.eta, lay.z_color(3));
    fill(lay.theta, lay.z_color(4));

    for (int i = 0; i < f.num_vars; ++i) {
        const int mid = lay.mid_x[i] - 1;
        for (int r = 1; r <= 4; ++r) {
            set(lay.gamma[r - 1][mid], lay.delta[lay.down_x[i] - 1], a[i] ? lay.t_color(i, r) : lay.f_color(i, r));
        }
        for (int s = 0; s < 12; ++s) {
            const auto [r, r2] = lay.pairs[s];
            const Vertex al = lay.alpha[s][lay.up_x[i] - 1];
            set(al, lay.gamma[r - 1][mid], a[i] ? lay.r_color(i) : lay.t_color(i, r));
            set(al, lay.gamma[r2 - 1][mid], a[i] ? lay.f_color(i, r2) : lay.r_color(i));
        }
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const Vertex e = lay.eta[lay.up_c[j] - 1];
        bool done = false;
        for (int p = 0; p < 3; ++p) {
            const Literal& lit = f.clauses[j][p];
            const int w = lay.omega[j][p];
            set(lay.delta[lay.down_x[lit.var] - 1], e, a[lit.var] ? lay.f_color(lit.var, w) : lay.t_color(lit.var, w));
            if (!done && literal_true(lit, a)) {
                set(e, lay.theta[lay.down_c[j] - 1], lit.positive ? lay.t_color(lit.var, w) : lay.f_color(lit.var, w));
                done = true;
            }
        }
    }
    return lab;
}

Assignment eth_assignment_from_labeling(const EthReduction& red, const Labeling& lab) {
    const VerifyReport rep = verify_labeling(normalized(red), lab);
    if (!rep.accepts(0)) {
        throw ContractError("labeling is not a list-respecting STC labeling without weak edges");
    }
    const EthLayout& lay = red.layout;
    const Graph& g = red.instance.g;
    Assignment a(static_cast<std::size_t>(lay.formula.num_vars), false);
    for (int i = 0; i < lay.formula.num_vars; ++i) {
        const EdgeId e = *g.edge_id(lay.delta[lay.down_x[i] - 1], lay.gamma[0][lay.mid_x[i] - 1]);
        a[i] = lab.color_of[e] == lay.t_color(i, 1);
    }
    if (!satisfies(lay.formula, a)) {
        throw ContractError("extracted assignment does not satisfy the formula");
    }
    return a;
}

} // namespace stc
