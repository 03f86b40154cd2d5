#pragma once

#include <string>
#include <variant>
#include <vector>

#include "stc/color_set.hpp"
#include "stc/graph.hpp"

namespace stc {

// Multi-STC: every edge may take any of the c strong colors.
struct MultiInstance {
    Graph g;
    int c = 1;
    int k = 0;

    friend bool operator==(const MultiInstance&, const MultiInstance&) = default;
};

// VL-Multi-STC: an edge {u,v} may take colors in lambda[u] ∩ lambda[v].
struct VLInstance {
    Graph g;
    int c = 1;
    int k = 0;
    std::vector<ColorSet> lambda;

    friend bool operator==(const VLInstance&, const VLInstance&) = default;
};

// EL-Multi-STC, the canonical form every variant normalizes into.
// psi is indexed by edge id; an empty list forces the edge weak.
struct ELInstance {
    Graph g;
    int c = 1;
    int k = 0;
    std::vector<ColorSet> psi;

    friend bool operator==(const ELInstance&, const ELInstance&) = default;
};

using AnyInstance = std::variant<MultiInstance, VLInstance, ELInstance>;

// Throw ValidationError when c < 1, k < 0, list sizes mismatch or a color
// falls outside 1..c.
void validate(const MultiInstance& inst);
void validate(const VLInstance& inst);
void validate(const ELInstance& inst);

ELInstance normalize(const MultiInstance& inst);
ELInstance normalize(const VLInstance& inst);
ELInstance normalize(const ELInstance& inst);
ELInstance normalize(const AnyInstance& inst);

const Graph& graph_of(const AnyInstance& inst);

// color_of[e] in {0..c}; 0 = weak.
struct Labeling {
    std::vector<Color> color_of;

    int weak_count() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

Labeling all_weak(const Graph& g);

enum class ViolationKind { StcP3, List };

struct Violation {
    ViolationKind kind = ViolationKind::StcP3;
    // For StcP3 both edges of the offending P3; for List, second == first.
    EdgeId first = 0;
    EdgeId second = 0;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerifyReport {
    bool is_stc = true;
    bool is_list_satisfying = true;
    int weak_count = 0;
    std::vector<Violation> violations;

    // STC, list-respecting and within the budget k.
    bool accepts(int k) const { return is_stc && is_list_satisfying && weak_count <= k; }
};

// Throws ValidationError if the labeling does not cover exactly the
// instance's edges or uses a color outside 0..c.
VerifyReport verify_labeling(const ELInstance& inst, const Labeling& lab);

std::string to_string(ViolationKind kind);

} // namespace stc
