#pragma once

#include <vector>

#include "stc/instance.hpp"

namespace stc {

// Vertices of G keep their ids 0..n-1 in H.
struct LiftLayout {
    int original_vertices = 0;
    // parts[v]: the k+1 vertices of C attached to v.
    std::vector<std::vector<Vertex>> parts;
    // cliques[i-1] = U_i, each of size k+1.
    std::vector<std::vector<Vertex>> cliques;
    // pendants[i-1][j-1] = u^i_j, adjacent to all of U_i.
    std::vector<std::vector<Vertex>> pendants;
};

struct LiftReduction {
    MultiInstance instance;  // c + 1 colors, same k
    LiftLayout layout;
};

LiftReduction lift_color(const MultiInstance& inst);

// Extends a labeling of G to H with the same number of weak edges.
Labeling lift_labeling_forward(const LiftReduction& red, const MultiInstance& original, const Labeling& lab);

} // namespace stc
