#pragma once

#include <array>
#include <vector>

#include "stc/cnf.hpp"
#include "stc/instance.hpp"

namespace stc {

struct NaeVariableGadget {
    std::vector<Vertex> cycle;  // v_0..v_{m'-1}
    // middle[i-1] = c_i, forming a triangle with cycle edge {v_{i-1}, v_{i mod m'}}.
    std::vector<Vertex> middle;
};

struct NaeClauseGadget {
    std::array<Vertex, 2> a{};
    std::array<Vertex, 3> b{};
    // connector[p] joins b[p] to the middle vertex chosen for literal p.
    std::array<EdgeId, 3> connector{};
    std::array<Vertex, 3> attached{};
    std::array<int, 3> attached_index{};  // i of c_i, 1-based
};

struct NaeLayout {
    CnfFormula formula;  // after padding
    int cycle_length = 0;
    std::vector<NaeVariableGadget> variables;
    std::vector<NaeClauseGadget> clauses;
};

struct NaeReduction {
    MultiInstance instance;  // c = 2, k = 3m
    NaeLayout layout;
};

// Formulas with fewer than three clauses are padded by repeating clauses.
NaeReduction reduce_nae3sat(const CnfFormula& f);

// Throws ContractError unless `a` NAE-satisfies the formula.
Labeling nae_labeling_from_assignment(const NaeReduction& red, const Assignment& a);

// One K_{2,3} gadget with a pendant stub on each b vertex, c = 2, full lists.
struct IsolatedClauseGadget {
    ELInstance instance;
    std::array<EdgeId, 3> connector{};
};

IsolatedClauseGadget isolated_clause_gadget();

} // namespace stc
