#pragma once

#include <vector>

#include "stc/graph.hpp"
#include "stc/instance.hpp"

namespace stc {

// Elements are arbitrary integer labels; family members must be drawn from
// the universe.
struct SetCoverInstance {
    std::vector<int> universe;
    std::vector<std::vector<int>> family;
    int t = 0;

    friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

// Throws ValidationError on repeated universe elements or members outside it.
void validate(const SetCoverInstance& sc);

struct SetCoverLayout {
    std::vector<Vertex> universe;  // universe[i] represents sc.universe[i]
    std::vector<Vertex> pads;      // z_{t+1}..z_{|F|}
    Vertex selector = 0;
    std::vector<EdgeId> clique_edges;    // E(U)
    std::vector<EdgeId> selector_edges;  // {u, a}
    std::vector<EdgeId> pad_edges;       // {z, a}
};

struct SetCoverReduction {
    VLInstance instance;  // k = 0, c = |F| + 1
    SetCoverLayout layout;
};

// Needs a nonempty family and 0 <= t <= |F|.
SetCoverReduction reduce_setcover(const SetCoverInstance& sc);

// `cover` lists family indices (0-based); needs |cover| <= t and full coverage.
Labeling setcover_labeling_from_cover(const SetCoverReduction& red, const SetCoverInstance& sc,
                                      const std::vector<int>& cover);

// Universe = edges of g numbered 1..m in id order, F_v = edges at v, t = n - s.
SetCoverInstance reduce_is_to_setcover(const Graph& g, int s);

} // namespace stc
