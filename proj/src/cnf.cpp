#include "stc/cnf.hpp"

#include <string>

#include "stc/errors.hpp"

namespace stc {

std::vector<int> CnfFormula::occurrences() const {
    std::vector<int> occ(static_cast<std::size_t>(num_vars), 0);
    for (const Clause& c : clauses) {
        for (const Literal& lit : c) {
            ++occ[lit.var];
        }
    }
    return occ;
}

void validate(const CnfFormula& f) {
    if (f.num_vars < 0) {
        throw ValidationError("negative variable count");
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const Clause& c = f.clauses[j];
        for (const Literal& lit : c) {
            if (lit.var < 0 || lit.var >= f.num_vars) {
                throw ValidationError("clause " + std::to_string(j + 1) + " uses variable " +
                                      std::to_string(lit.var + 1) + " outside 1.." + std::to_string(f.num_vars));
            }
        }
        if (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var) {
            throw ValidationError("clause " + std::to_string(j + 1) + " repeats a variable");
        }
    }
}

bool literal_true(const Literal& lit, const Assignment& a) { return a[lit.var] == lit.positive; }

bool satisfies(const CnfFormula& f, const Assignment& a) {
    for (const Clause& c : f.clauses) {
        if (!literal_true(c[0], a) && !literal_true(c[1], a) && !literal_true(c[2], a)) {
            return false;
        }
    }
    return true;
}

bool nae_satisfies(const CnfFormula& f, const Assignment& a) {
    for (const Clause& c : f.clauses) {
        const int t = literal_true(c[0], a) + literal_true(c[1], a) + literal_true(c[2], a);
        if (t == 0 || t == 3) {
            return false;
        }
    }
    return true;
}

std::vector<Assignment> satisfying_assignments(const CnfFormula& f, std::size_t limit, bool nae) {
    if (f.num_vars > 30) {
        throw ResourceLimitError("exhaustive assignment search limited to 30 variables");
    }
    std::vector<Assignment> out;
    Assignment a(static_cast<std::size_t>(f.num_vars), false);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars) && out.size() < limit; ++bits) {
        for (int i = 0; i < f.num_vars; ++i) {
            a[i] = (bits >> i) & 1U;
        }
        if (nae ? nae_satisfies(f, a) : satisfies(f, a)) {
            out.push_back(a);
        }
    }
    return out;
}

} // namespace stc
