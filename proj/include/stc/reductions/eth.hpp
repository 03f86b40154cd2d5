#pragma once

#include <array>
#include <string>
#include <vector>

#include "stc/cnf.hpp"
#include "stc/instance.hpp"

namespace stc {

// Layered construction for 3-SAT with at most four occurrences per variable.
// Index maps hold 1-based values; variables and clauses are 0-based.
struct EthLayout {
    CnfFormula formula;
    int root = 0;  // ceil(sqrt(n))

    // Ordered pairs (r, r') with r != r', lexicographic; alpha[p][t-1].
    std::array<std::pair<int, int>, 12> pairs{};
    std::vector<std::vector<Vertex>> alpha;   // U^X
    std::array<std::vector<Vertex>, 4> gamma; // M^X, gamma[r-1][t-1]
    std::vector<Vertex> delta;                // D^X
    std::vector<Vertex> eta;                  // U^C
    std::vector<Vertex> theta;                // D^C

    Graph variable_conflicts;  // H^X
    Graph clause_conflicts;    // H^C
    std::vector<int> variable_color;          // greedy 9-coloring of H^X, 0-based
    std::vector<std::vector<int>> groups;     // groups[s-1] = variables of S_s
    std::vector<int> down_x, mid_x, up_x;
    std::vector<int> up_c, down_c;
    std::vector<std::array<int, 3>> omega;    // occurrence number per clause literal

    Color t_color(int var, int r) const { return 8 * var + 2 * (r - 1) + 1; }
    Color f_color(int var, int r) const { return 8 * var + 2 * (r - 1) + 2; }
    Color r_color(int var) const { return 8 * formula.num_vars + var + 1; }
    Color z_color(int q) const { return 9 * formula.num_vars + q; }

    // Colors T/F of every literal of the clause, and the colors of its literals.
    ColorSet clause_variable_colors(int j) const;
    ColorSet clause_literal_colors(int j) const;
};

struct EthReduction {
    VLInstance instance;  // k = 0, c = 9n + 4
    EthLayout layout;
};

// Throws ValidationError on malformed clauses or a variable in more than four clauses.
EthReduction reduce_3sat_eth(const CnfFormula& f);

struct ClaimCheck {
    std::string name;
    bool holds = false;
};

// Structural facts the correctness argument depends on, checked on the layout.
std::vector<ClaimCheck> eth_claims(const EthReduction& red);

// Throws ContractError unless `a` satisfies the formula.
Labeling eth_labeling_from_assignment(const EthReduction& red, const Assignment& a);

// Throws ContractError unless `lab` is a list-respecting STC labeling with no
// weak edge, or if the extracted assignment fails to satisfy the formula.
Assignment eth_assignment_from_labeling(const EthReduction& red, const Labeling& lab);

} // namespace stc
