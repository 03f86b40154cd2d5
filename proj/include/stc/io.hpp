#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "stc/cnf.hpp"
#include "stc/instance.hpp"
#include "stc/kernel.hpp"
#include "stc/reductions/setcover.hpp"
#include "stc/solvers.hpp"

namespace stc {

// Instance documents:
//
//   # comment
//   p <mstc|vlmstc|elmstc> <n> <m> <c> <k>
//   e <u> <v> [colors]        colors: 1,3,4 | * (all, default) | - (none)
//   vl <u> <colors>           vlmstc only; missing vertices get *
//
// Vertices are 1-based in text. Errors raise ParseError with the line number.
AnyInstance parse_instance(std::string_view text);

// Canonical text: edges in id order, every list spelled out (vl for every vertex).
std::string emit_instance(const AnyInstance& inst);

// "s YES <weak>" and one "<u> <v> <color>" line per edge in id order.
std::string emit_labeling(const Labeling& lab, const Graph& g);
std::string emit_result(const SolveResult& r, const Graph& g);

// Inverse of emit_result; nullopt for "s NO". Edge lines may come in any
// order but must cover each edge exactly once.
std::optional<Labeling> parse_labeling(std::string_view text, const Graph& g);

// DIMACS cnf with exactly three literals per clause.
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string emit_dimacs_cnf(const CnfFormula& f);

// Lines "u <elements...>", one "f <members...>" per set, and "t <int>".
SetCoverInstance parse_setcover(std::string_view text);
std::string emit_setcover(const SetCoverInstance& sc);

// "p gallai <vertices> <edges>", then "v <id> <u> <v>" per Gallai vertex
// (the edge it stands for) and "e <a> <b>" per Gallai edge; ids 1-based.
std::string emit_gallai(const Graph& g);

// "k1 <value>" followed by one "c <u> <v>" line per cover edge.
std::string emit_k1(const Graph& g);

// Comment lines describing a kernelization of `input`. Vertices named in rule
// lines are 1-based ids of the instance that rule was applied to.
std::string emit_kernel_trace(const KernelResult& r, const Graph& input);

} // namespace stc
