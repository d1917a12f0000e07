#pragma once

#include <string>

#include "ttg/class_set.hpp"
#include "ttg/isotropy.hpp"

namespace ttg {

// Class tokens: C3, D5, SO2, O2, A4, S4, A5, G, F<i>; T is accepted for the
// full circle group, and the ambient group's own name for its full class.
SubgroupClass parse_class(const GroupId& g, const std::string& token);

// Set-descriptor mini-grammar: unions (+) of `{K1,K2,...}`, `Lct{...}`,
// `tailC(n)` / `tailD(n)`, `all`, and bare class tokens.
ClassSet parse_class_set(const GroupId& g, const std::string& text);

// Expression grammar: S0, 0, cell(K), basic(K, cutoff), iso(K),
// wedge(e,e), smash(e,e), susp(n,e), dual(e).
ExprPtr parse_expr(const GroupId& g, const std::string& text);

}  // namespace ttg
