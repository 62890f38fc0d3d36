#pragma once

#include <string>
#include <vector>

#include "ncalg/parse.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/skew.hpp"

namespace ncalg {

// Built-in algebra presentations. Parametrized presets take arguments in
// parentheses, e.g. "Tq(3/2)", "Tq_abc(1-q,1-q,1-q)", "T6_quot(0)"; "Tq"
// alone is the symbolic quantum-parameter variant. gr_* presets are computed
// as top-degree truncations of their parents.
std::vector<std::string> algebra_preset_names();
PresentationFile algebra_preset(const std::string& spec, bool allow_degenerate_q = false);

// Built-in skew Laurent contexts with reversing automorphisms:
// V, Vt, Wq(q), Wq (symbolic), WQ.
std::vector<std::string> skew_preset_names();
SkewFile skew_preset(const std::string& spec);

// Central elements attached to the presets that have one (T5, T1, T6, Tq).
NCPoly preset_central_element(const std::string& name, bool allow_degenerate_q = false);

}  // namespace ncalg
