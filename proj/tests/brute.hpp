#pragma once

// Small independent reference computations used as test oracles. Nothing
// here calls into the library except for the Graph container itself.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "stc/cnf.hpp"
#include "stc/graph.hpp"
#include "stc/instance.hpp"

namespace brute {

using Pairs = std::vector<std::pair<int, int>>;

inline Pairs all_pairs(int n) {
    Pairs out;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

// Every labeled graph on n vertices, in mask order over all_pairs(n).
inline std::vector<stc::Graph> all_graphs(int n) {
    const Pairs slots = all_pairs(n);
    std::vector<stc::Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
        Pairs chosen;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if ((mask >> i) & 1U) {
                chosen.push_back(slots[i]);
            }
        }
        out.push_back(stc::build_graph(n, chosen));
    }
    return out;
}

inline stc::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Pairs chosen;
    for (const auto& pr : all_pairs(n)) {
        if (coin(rng)) {
            chosen.push_back(pr);
        }
    }
    return stc::build_graph(n, chosen);
}

// Random graph where each vertex of a small random base graph is blown up
// into a clique, then a few pairs are flipped. Yields large critical cliques.
inline stc::Graph random_clustered_graph(int max_n, std::mt19937_64& rng) {
    const int base = 2 + static_cast<int>(rng() % 3);
    std::vector<int> owner;
    for (int b = 0; b < base && static_cast<int>(owner.size()) < max_n; ++b) {
        const int size = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < size && static_cast<int>(owner.size()) < max_n; ++i) {
            owner.push_back(b);
        }
    }
    const int n = static_cast<int>(owner.size());
    std::vector<std::vector<char>> base_adj(static_cast<std::size_t>(base), std::vector<char>(static_cast<std::size_t>(base), 0));
    for (int a = 0; a < base; ++a) {
        for (int b = a + 1; b < base; ++b) {
            base_adj[a][b] = base_adj[b][a] = static_cast<char>(rng() % 2);
        }
    }
    const int flips = static_cast<int>(rng() % 3);
    std::set<std::pair<int, int>> flipped;
    for (int f = 0; f < flips && n >= 2; ++f) {
        int u = static_cast<int>(rng() % static_cast<unsigned>(n));
        int v = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (u != v) {
            flipped.emplace(std::min(u, v), std::max(u, v));
        }
    }
    Pairs chosen;
    for (const auto& [u, v] : all_pairs(n)) {
        bool edge = owner[u] == owner[v] || base_adj[owner[u]][owner[v]];
        if (flipped.count({u, v})) {
            edge = !edge;
        }
        if (edge) {
            chosen.emplace_back(u, v);
        }
    }
    return stc::build_graph(n, chosen);
}

inline stc::Graph path(int n) {
    Pairs p;
    for (int i = 0; i + 1 < n; ++i) {
        p.emplace_back(i, i + 1);
    }
    return stc::build_graph(n, p);
}

inline stc::Graph cycle(int n) {
    Pairs p;
    for (int i = 0; i < n; ++i) {
        p.emplace_back(i, (i + 1) % n);
    }
    return stc::build_graph(n, p);
}

inline stc::Graph complete(int n) { return stc::build_graph(n, all_pairs(n)); }

inline stc::Graph star(int leaves) {
    Pairs p;
    for (int i = 1; i <= leaves; ++i) {
        p.emplace_back(0, i);
    }
    return stc::build_graph(leaves + 1, p);
}

inline bool adjacent(const stc::Graph& g, int u, int v) {
    for (const auto& e : g.edges()) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            return true;
        }
    }
    return false;
}

// Pairs of edge indices forming an induced P3, by checking every edge pair.
inline std::set<std::pair<int, int>> p3_pairs(const stc::Graph& g) {
    std::set<std::pair<int, int>> out;
    const auto& es = g.edges();
    for (std::size_t a = 0; a < es.size(); ++a) {
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            const auto [p, q] = std::pair{es[a].u, es[a].v};
            const auto [r, t] = std::pair{es[b].u, es[b].v};
            int x = -1;
            int y = -1;
            if (p == r) {
                x = q, y = t;
            } else if (p == t) {
                x = q, y = r;
            } else if (q == r) {
                x = p, y = t;
            } else if (q == t) {
                x = p, y = r;
            } else {
                continue;
            }
            if (!adjacent(g, x, y)) {
                out.emplace(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    return out;
}

// Minimum vertex cover size by trying every vertex subset.
inline int min_cover_size(int n, const std::vector<std::pair<int, int>>& edges) {
    int best = n;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        bool ok = true;
        for (const auto& [u, v] : edges) {
            if (!((s >> u) & 1U) && !((s >> v) & 1U)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            best = std::min(best, std::popcount(s));
        }
    }
    return best;
}

inline int min_cover_size(const stc::Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (const auto& e : g.edges()) {
        es.emplace_back(e.u, e.v);
    }
    return min_cover_size(g.num_vertices(), es);
}

inline bool labeling_ok(const stc::ELInstance& inst, const std::vector<int>& col,
                        const std::set<std::pair<int, int>>& p3s) {
    for (std::size_t e = 0; e < col.size(); ++e) {
        if (col[e] != 0 && !inst.psi[e].contains(col[e])) {
            return false;
        }
    }
    for (const auto& [a, b] : p3s) {
        if (col[a] != 0 && col[a] == col[b]) {
            return false;
        }
    }
    return true;
}

// Fewest weak edges over every list-respecting STC labeling, by full
// enumeration of (c+1)^m labelings. Returns m+1 if none exists (never: all weak works).
inline int min_weak(const stc::ELInstance& inst) {
    const int m = inst.g.num_edges();
    const auto p3s = p3_pairs(inst.g);
    std::vector<int> col(static_cast<std::size_t>(m), 0);
    int best = m;
    while (true) {
        const int weak = static_cast<int>(std::count(col.begin(), col.end(), 0));
        if (weak < best && labeling_ok(inst, col, p3s)) {
            best = weak;
        }
        int i = 0;
        while (i < m && col[i] == inst.c) {
            col[i] = 0;
            ++i;
        }
        if (i == m) {
            break;
        }
        ++col[i];
    }
    return best;
}

inline stc::ELInstance full_lists(const stc::Graph& g, int c, int k) {
    stc::ELInstance inst{g, c, k, {}};
    inst.psi.assign(static_cast<std::size_t>(g.num_edges()), stc::ColorSet::full(c));
    return inst;
}

// Each color of 1..c is kept independently with probability 1/2.
inline stc::ELInstance random_lists(const stc::Graph& g, int c, int k, std::mt19937_64& rng) {
    stc::ELInstance inst{g, c, k, {}};
    std::bernoulli_distribution coin(0.5);
    for (int e = 0; e < g.num_edges(); ++e) {
        std::vector<int> cs;
        for (int x = 1; x <= c; ++x) {
            if (coin(rng)) {
                cs.push_back(x);
            }
        }
        inst.psi.emplace_back(cs);
    }
    return inst;
}

// Random 3-CNF on n variables with up to `clauses` clauses, each variable in
// at most `max_occ` of them. Stops early once fewer than three variables have room.
inline stc::CnfFormula random_cnf(int n, int clauses, std::mt19937_64& rng, int max_occ = 4) {
    stc::CnfFormula f;
    f.num_vars = n;
    std::vector<int> occ(static_cast<std::size_t>(n), 0);
    std::bernoulli_distribution coin(0.5);
    for (int j = 0; j < clauses; ++j) {
        std::vector<int> room;
        for (int v = 0; v < n; ++v) {
            if (occ[v] < max_occ) {
                room.push_back(v);
            }
        }
        if (room.size() < 3) {
            break;
        }
        std::shuffle(room.begin(), room.end(), rng);
        stc::Clause cl;
        for (int p = 0; p < 3; ++p) {
            cl[p] = stc::Literal{room[p], coin(rng)};
            ++occ[room[p]];
        }
        f.clauses.push_back(cl);
    }
    return f;
}

// Is there a subfamily of at most t sets covering the universe?
inline bool has_cover(const std::vector<int>& universe, const std::vector<std::vector<int>>& family, int t) {
    const std::size_t f = family.size();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f); ++mask) {
        if (std::popcount(mask) > t) {
            continue;
        }
        std::set<int> covered;
        for (std::size_t i = 0; i < f; ++i) {
            if ((mask >> i) & 1U) {
                covered.insert(family[i].begin(), family[i].end());
            }
        }
        bool all = true;
        for (const int x : universe) {
            all = all && covered.count(x);
        }
        if (all) {
            return true;
        }
    }
    return false;
}

inline int max_independent_set(const stc::Graph& g) {
    const int n = g.num_vertices();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& e : g.edges()) {
            ok = ok && !(((mask >> e.u) & 1U) && ((mask >> e.v) & 1U));
        }
        if (ok) {
            best = std::max(best, std::popcount(mask));
        }
    }
    return best;
}

} // namespace brute
