#include "stc/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "stc/errors.hpp"
#include "stc/gallai.hpp"

namespace stc {

namespace {

SolveResult yes_with(Labeling lab, std::uint64_t explored) {
    SolveResult r;
    r.yes = true;
    r.witness = std::move(lab);
    r.stats.explored = explored;
    return r;
}

SolveResult no_with(std::uint64_t explored) {
    SolveResult r;
    r.stats.explored = explored;
    return r;
}

class OracleSearch {
public:
    OracleSearch(const ELInstance& inst, std::uint64_t max_nodes)
        : inst_(inst), g_(inst.g), color_(static_cast<std::size_t>(g_.num_edges()), 0), max_nodes_(max_nodes) {}

    bool run() { return dfs(0, 0); }

    const std::vector<Color>& colors() const { return color_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Would coloring e with x clash with an already colored edge through an induced P3?
    bool conflicts(EdgeId e, Color x) const {
        const Edge& ed = g_.edge(e);
        for (const auto& [center, other] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
            const auto nbrs = g_.neighbors(center);
            const auto ids = g_.incident_edges(center);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const EdgeId f = ids[i];
                if (f < e && color_[f] == x && nbrs[i] != other && !g_.has_edge(other, nbrs[i])) {
                    return true;
                }
            }
        }
        return false;
    }

    bool dfs(EdgeId e, int weak) {
        if (++nodes_ > max_nodes_) {
            throw ResourceLimitError("oracle node limit exceeded");
        }
        if (e == g_.num_edges()) {
            return true;
        }
        if (weak < inst_.k) {
            color_[e] = 0;
            if (dfs(e + 1, weak + 1)) {
                return true;
            }
        }
        for (const Color x : inst_.psi[e]) {
            if (!conflicts(e, x)) {
                color_[e] = x;
                if (dfs(e + 1, weak)) {
                    return true;
                }
            }
        }
        color_[e] = 0;
        return false;
    }

    const ELInstance& inst_;
    const Graph& g_;
    std::vector<Color> color_;
    std::uint64_t nodes_ = 0;
    std::uint64_t max_nodes_;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

using Mask = std::uint32_t;

// Bit-packed membership of subsets of a ground set of size m.
class SubsetBits {
public:
    explicit SubsetBits(int m) : words_((std::size_t{1} << m) / 64 + 1, 0) {}
    bool test(Mask s) const { return (words_[s >> 6] >> (s & 63)) & 1U; }
    void set(Mask s) { words_[s >> 6] |= std::uint64_t{1} << (s & 63); }

private:
    std::vector<std::uint64_t> words_;
};

// Enumerates list colorings (0 allowed) of the cover vertices and extends each
// leaf greedily. Subtrees are cut when the zeros already placed plus the open
// vertices left without any color exceed k. The next cover vertex is the one
// with the fewest available colors; strong colors are tried before 0, and of
// several interchangeable colors that are still unused only the first is tried.
class CoverBranching {
public:
    CoverBranching(const ELInstance& inst, const Graph& gallai, const K1Result& kr, std::uint64_t max_nodes)
        : inst_(inst),
          gal_(gallai),
          cover_(kr.cover),
          independent_(kr.independent),
          c_(inst.c),
          max_nodes_(max_nodes) {
        const int m = gal_.num_vertices();
        assigned_.assign(static_cast<std::size_t>(m), 0);
        chi_.assign(static_cast<std::size_t>(m), 0);
        blocked_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(c_ + 1), 0);
        avail_.resize(static_cast<std::size_t>(m));
        for (Vertex v = 0; v < m; ++v) {
            avail_[v] = inst_.psi[v].size();
            if (avail_[v] == 0) {
                ++forced_;
            }
        }
        // Colors x and y are interchangeable when every list holds both or neither.
        std::vector<std::vector<char>> member(static_cast<std::size_t>(c_ + 1),
                                              std::vector<char>(static_cast<std::size_t>(m), 0));
        for (Vertex v = 0; v < m; ++v) {
            for (const Color x : inst_.psi[v]) {
                member[x][v] = 1;
            }
        }
        twin_of_.assign(static_cast<std::size_t>(c_ + 1), 0);
        for (Color x = 1; x <= c_; ++x) {
            twin_of_[x] = x;
            for (Color y = 1; y < x; ++y) {
                if (member[x] == member[y]) {
                    twin_of_[x] = twin_of_[y];
                    break;
                }
            }
        }
        uses_.assign(static_cast<std::size_t>(c_ + 1), 0);
    }

    bool run() { return dfs(0); }

    const std::vector<Color>& chi() const { return chi_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    void block(Vertex v, Color x) {
        for (const Vertex w : gal_.neighbors(v)) {
            if (!inst_.psi[w].contains(x)) {
                continue;
            }
            if (blocked_[slot(w, x)]++ == 0 && --avail_[w] == 0 && !assigned_[w]) {
                ++forced_;
            }
        }
    }

    void unblock(Vertex v, Color x) {
        for (const Vertex w : gal_.neighbors(v)) {
            if (!inst_.psi[w].contains(x)) {
                continue;
            }
            if (--blocked_[slot(w, x)] == 0 && avail_[w]++ == 0 && !assigned_[w]) {
                --forced_;
            }
        }
    }

    std::size_t slot(Vertex w, Color x) const {
        return static_cast<std::size_t>(w) * static_cast<std::size_t>(c_ + 1) + static_cast<std::size_t>(x);
    }

    std::optional<Vertex> pick() const {
        std::optional<Vertex> best;
        for (const Vertex v : cover_) {
            if (!assigned_[v] && (!best || avail_[v] < avail_[*best])) {
                best = v;
                if (avail_[v] == 0) {
                    break;
                }
            }
        }
        return best;
    }

    bool dfs(int depth) {
        if (++nodes_ > max_nodes_) {
            throw ResourceLimitError("branching node limit exceeded");
        }
        if (zeros_ + forced_ > inst_.k) {
            return false;
        }
        const std::optional<Vertex> next = pick();
        if (!next) {
            return extend();
        }
        const Vertex v = *next;
        assigned_[v] = 1;
        bool found = false;
        if (avail_[v] == 0) {
            // Already counted in forced_; it stays a zero.
            --forced_;
            ++zeros_;
            chi_[v] = 0;
            found = dfs(depth + 1);
            --zeros_;
            ++forced_;
        } else {
            std::vector<char> fresh_tried(static_cast<std::size_t>(c_ + 1), 0);
            for (const Color x : inst_.psi[v]) {
                if (blocked_[slot(v, x)] != 0) {
                    continue;
                }
                if (uses_[x] == 0) {
                    if (fresh_tried[twin_of_[x]]) {
                        continue;
                    }
                    fresh_tried[twin_of_[x]] = 1;
                }
                chi_[v] = x;
                ++uses_[x];
                block(v, x);
                found = dfs(depth + 1);
                unblock(v, x);
                --uses_[x];
                if (found) {
                    break;
                }
            }
            if (!found) {
                chi_[v] = 0;
                ++zeros_;
                found = dfs(depth + 1);
                --zeros_;
            }
        }
        if (!found) {
            chi_[v] = 0;
            assigned_[v] = 0;
        }
        return found;
    }

    // Smallest color of P_v for every independent vertex, 0 if P_v is empty.
    bool extend() {
        int zeros = zeros_;
        for (const Vertex v : independent_) {
            chi_[v] = 0;
            for (const Color x : inst_.psi[v]) {
                if (blocked_[slot(v, x)] == 0) {
                    chi_[v] = x;
                    break;
                }
            }
            if (chi_[v] == 0) {
                ++zeros;
            }
        }
        return zeros <= inst_.k;
    }

    const ELInstance& inst_;
    const Graph& gal_;
    const std::vector<Vertex>& cover_;
    const std::vector<Vertex>& independent_;
    int c_;
    std::vector<char> assigned_;
    std::vector<Color> chi_;
    std::vector<int> blocked_;
    std::vector<int> avail_;
    std::vector<Color> twin_of_;
    std::vector<int> uses_;
    int zeros_ = 0;
    int forced_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t max_nodes_;
};

} // namespace

SolveResult solve_oracle(const ELInstance& inst, const SolverLimits& limits) {
    validate(inst);
    std::uint64_t space = 1;
    for (const auto& list : inst.psi) {
        space = saturating_mul(space, static_cast<std::uint64_t>(list.size()) + 1);
    }
    if (space > limits.max_enum) {
        throw ResourceLimitError("oracle enumeration space " + std::to_string(space) + " exceeds cap " +
                                 std::to_string(limits.max_enum));
    }
    OracleSearch search(inst, std::numeric_limits<std::uint64_t>::max());
    if (search.run()) {
        return yes_with(Labeling{search.colors()}, search.nodes());
    }
    return no_with(search.nodes());
}

SolveResult solve_subset_dp(const ELInstance& inst, const SolverLimits& limits) {
    validate(inst);
    const int m = inst.g.num_edges();
    if (m > 31 || (std::uint64_t{1} << m) > limits.max_subsets) {
        throw ResourceLimitError("subset DP over " + std::to_string(m) + " Gallai vertices exceeds cap " +
                                 std::to_string(limits.max_subsets) + " subsets");
    }
    const GallaiGraph gal = gallai_graph(inst.g);
    const std::size_t count = std::size_t{1} << m;

    std::vector<Mask> adj(static_cast<std::size_t>(m), 0);
    for (Vertex v = 0; v < m; ++v) {
        for (const Vertex w : gal.base.neighbors(v)) {
            adj[v] |= Mask{1} << w;
        }
    }
    SubsetBits independent(m);
    independent.set(0);
    for (std::size_t s = 1; s < count; ++s) {
        const Mask sm = static_cast<Mask>(s);
        const int v = std::countr_zero(sm);
        const Mask rest = sm & (sm - 1);
        if (independent.test(rest) && (adj[v] & rest) == 0) {
            independent.set(sm);
        }
    }
    std::vector<Mask> allowed(static_cast<std::size_t>(inst.c) + 1, 0);
    for (Vertex v = 0; v < m; ++v) {
        for (const Color x : inst.psi[v]) {
            allowed[x] |= Mask{1} << v;
        }
    }

    // layers[i-1] holds D[., i].
    std::vector<SubsetBits> layers;
    layers.reserve(static_cast<std::size_t>(inst.c));
    std::uint64_t explored = 0;
    {
        SubsetBits first(m);
        for (std::size_t s = 0; s < count; ++s) {
            const Mask sm = static_cast<Mask>(s);
            if ((sm & ~allowed[1]) == 0 && independent.test(sm)) {
                first.set(sm);
            }
        }
        explored += count;
        layers.push_back(std::move(first));
    }
    for (int i = 2; i <= inst.c; ++i) {
        const SubsetBits& prev = layers.back();
        SubsetBits cur(m);
        for (std::size_t s = 0; s < count; ++s) {
            const Mask sm = static_cast<Mask>(s);
            const Mask options = sm & allowed[i];
            // Submasks of the color-i candidates, including the empty one.
            for (Mask sub = 0;; sub = (sub - options) & options) {
                ++explored;
                if (independent.test(sub) && prev.test(sm & ~sub)) {
                    cur.set(sm);
                    break;
                }
                if (sub == options) {
                    break;
                }
            }
        }
        layers.push_back(std::move(cur));
    }

    const int need = m - inst.k;
    std::optional<Mask> chosen;
    for (std::size_t s = 0; s < count; ++s) {
        const Mask sm = static_cast<Mask>(s);
        if (std::popcount(sm) >= need && layers.back().test(sm)) {
            chosen = sm;
            break;
        }
    }
    if (!chosen) {
        return no_with(explored);
    }

    Labeling lab{std::vector<Color>(static_cast<std::size_t>(m), 0)};
    Mask s = *chosen;
    for (int i = inst.c; i >= 2; --i) {
        const Mask options = s & allowed[i];
        for (Mask sub = 0;; sub = (sub - options) & options) {
            if (independent.test(sub) && layers[i - 2].test(s & ~sub)) {
                for (Mask b = sub; b != 0; b &= b - 1) {
                    lab.color_of[std::countr_zero(b)] = i;
                }
                s &= ~sub;
                break;
            }
            if (sub == options) {
                throw ContractError("subset DP re-descent found no predecessor");
            }
        }
    }
    for (Mask b = s; b != 0; b &= b - 1) {
        lab.color_of[std::countr_zero(b)] = 1;
    }
    return yes_with(std::move(lab), explored);
}

SolveResult solve_fpt(const ELInstance& inst, const SolverLimits& limits) {
    validate(inst);
    const GallaiGraph gal = gallai_graph(inst.g);
    const K1Result kr = k1(inst.g);
    CoverBranching search(inst, gal.base, kr, limits.max_nodes);
    if (search.run()) {
        return yes_with(Labeling{search.chi()}, search.nodes());
    }
    return no_with(search.nodes());
}

std::optional<SolveResult> shortcut_multi(const MultiInstance& inst) {
    validate(inst);
    const K1Result kr = k1(inst.g);
    if (inst.c <= kr.k1) {
        return std::nullopt;
    }
    Labeling lab{std::vector<Color>(static_cast<std::size_t>(inst.g.num_edges()), kr.k1 + 1)};
    Color next = 1;
    for (const Vertex e : kr.cover) {
        lab.color_of[e] = next++;
    }
    return yes_with(std::move(lab), 0);
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    if (name == "oracle") {
        return Algorithm::Oracle;
    }
    if (name == "dp") {
        return Algorithm::Dp;
    }
    if (name == "fpt") {
        return Algorithm::Fpt;
    }
    if (name == "auto") {
        return Algorithm::Auto;
    }
    return std::nullopt;
}

SolveResult solve(const AnyInstance& inst, Algorithm algo, const SolverLimits& limits) {
    const ELInstance el = normalize(inst);
    switch (algo) {
    case Algorithm::Oracle:
        return solve_oracle(el, limits);
    case Algorithm::Dp:
        return solve_subset_dp(el, limits);
    case Algorithm::Fpt:
        return solve_fpt(el, limits);
    case Algorithm::Auto:
        break;
    }
    if (const auto* multi = std::get_if<MultiInstance>(&inst)) {
        if (auto shortcut = shortcut_multi(*multi)) {
            return *shortcut;
        }
    }
    try {
        return solve_fpt(el, limits);
    } catch (const ResourceLimitError&) {
        return solve_subset_dp(el, limits);
    }
}

} // namespace stc
