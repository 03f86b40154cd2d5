#include "stc/instance.hpp"

#include <algorithm>

#include "stc/errors.hpp"

namespace stc {

namespace {

void check_header(const Graph& /*g*/, int c, int k) {
    if (c < 1) {
        throw ValidationError("number of strong colors must be at least 1, got " + std::to_string(c));
    }
    if (k < 0) {
        throw ValidationError("weak-edge budget must be nonnegative, got " + std::to_string(k));
    }
}

void check_lists(const std::vector<ColorSet>& lists, std::size_t expected, int c, const char* what) {
    if (lists.size() != expected) {
        throw ValidationError(std::string(what) + " has " + std::to_string(lists.size()) + " entries, expected " +
                              std::to_string(expected));
    }
    for (const auto& l : lists) {
        if (!l.empty() && (l.min() < 1 || l.max() > c)) {
            throw ValidationError(std::string(what) + " contains a color outside 1.." + std::to_string(c));
        }
    }
}

} // namespace

void validate(const MultiInstance& inst) { check_header(inst.g, inst.c, inst.k); }

void validate(const VLInstance& inst) {
    check_header(inst.g, inst.c, inst.k);
    check_lists(inst.lambda, static_cast<std::size_t>(inst.g.num_vertices()), inst.c, "vertex list");
}

void validate(const ELInstance& inst) {
    check_header(inst.g, inst.c, inst.k);
    check_lists(inst.psi, static_cast<std::size_t>(inst.g.num_edges()), inst.c, "edge list");
}

ELInstance normalize(const MultiInstance& inst) {
    validate(inst);
    return ELInstance{inst.g, inst.c, inst.k,
                      std::vector<ColorSet>(static_cast<std::size_t>(inst.g.num_edges()), ColorSet::full(inst.c))};
}

ELInstance normalize(const VLInstance& inst) {
    validate(inst);
    ELInstance out{inst.g, inst.c, inst.k, {}};
    out.psi.reserve(static_cast<std::size_t>(inst.g.num_edges()));
    for (const auto& e : inst.g.edges()) {
        out.psi.push_back(inst.lambda[e.u].intersect(inst.lambda[e.v]));
    }
    return out;
}

ELInstance normalize(const ELInstance& inst) {
    validate(inst);
    return inst;
}

ELInstance normalize(const AnyInstance& inst) {
    return std::visit([](const auto& x) { return normalize(x); }, inst);
}

const Graph& graph_of(const AnyInstance& inst) {
    return std::visit([](const auto& x) -> const Graph& { return x.g; }, inst);
}

int Labeling::weak_count() const {
    return static_cast<int>(std::count(color_of.begin(), color_of.end(), 0));
}

Labeling all_weak(const Graph& g) { return Labeling{std::vector<Color>(static_cast<std::size_t>(g.num_edges()), 0)}; }

VerifyReport verify_labeling(const ELInstance& inst, const Labeling& lab) {
    if (lab.color_of.size() != static_cast<std::size_t>(inst.g.num_edges())) {
        throw ValidationError("labeling covers " + std::to_string(lab.color_of.size()) + " edges, instance has " +
                              std::to_string(inst.g.num_edges()));
    }
    VerifyReport report;
    for (EdgeId e = 0; e < inst.g.num_edges(); ++e) {
        const Color col = lab.color_of[e];
        if (col < 0 || col > inst.c) {
            throw ValidationError("edge " + std::to_string(e) + " has color " + std::to_string(col) +
                                  " outside 0.." + std::to_string(inst.c));
        }
        if (col == 0) {
            ++report.weak_count;
        } else if (!inst.psi[e].contains(col)) {
            report.is_list_satisfying = false;
            report.violations.push_back(Violation{ViolationKind::List, e, e});
        }
    }
    for (const auto& p : induced_p3s(inst.g)) {
        const Color a = lab.color_of[p.first];
        if (a != 0 && a == lab.color_of[p.second]) {
            report.is_stc = false;
            report.violations.push_back(Violation{ViolationKind::StcP3, p.first, p.second});
        }
    }
    return report;
}

std::string to_string(ViolationKind kind) { return kind == ViolationKind::StcP3 ? "stc-P3" : "list"; }

} // namespace stc
