#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace stc {

struct Literal {
    int var = 0;  // 0-based
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    // Number of clauses containing each variable.
    std::vector<int> occurrences() const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

using Assignment = std::vector<bool>;

// Throws ValidationError unless every clause has three distinct in-range variables.
void validate(const CnfFormula& f);

bool literal_true(const Literal& lit, const Assignment& a);
bool satisfies(const CnfFormula& f, const Assignment& a);
// Every clause has a true and a false literal.
bool nae_satisfies(const CnfFormula& f, const Assignment& a);

// Satisfying assignments in increasing binary order (variable 0 is the lowest
// bit, false < true), at most `limit` of them. Exhaustive; meant for tiny n.
std::vector<Assignment> satisfying_assignments(const CnfFormula& f, std::size_t limit, bool nae = false);

} // namespace stc
