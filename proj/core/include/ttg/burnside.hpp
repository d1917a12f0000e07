#pragma once

#include <utility>

#include "ttg/phi_space.hpp"
#include "ttg/ratmat.hpp"

namespace ttg {

// Table of marks of a finite catalogue group: rows and columns indexed by the
// subgroup classes in increasing-order, entry (L row, K column) = |(G/K)^L|.
struct MarksMatrix {
  GroupId group;
  std::vector<SubgroupClass> basis;
  Matrix m;
};

MarksMatrix marks_matrix(const GroupId& g);

// Coefficients over the transitive basis [G/K] of the primitive idempotent
// with mark 1 at L and 0 elsewhere.
RatVec primitive_idempotent(const GroupId& g, SubgroupClass l);

// Mark at L of a transitive-basis vector.
Rat mark_of(const GroupId& g, const RatVec& coeffs, SubgroupClass l);

// Element of the rational Burnside ring in the function model: a locally
// constant Q-valued function on PhiG, stored as a finite partition into
// clopen cells with one exact rational value each.
struct BurnsideElement {
  PhiSpace space;
  // normalized: cells pairwise disjoint, covering PhiG, distinct values,
  // sorted by value
  std::vector<std::pair<Rat, ClopenSet>> chart;

  Rat value_at(SubgroupClass k) const;
  bool operator==(const BurnsideElement&) const = default;
};

BurnsideElement burnside_constant(const GroupId& g, const Rat& value);
inline BurnsideElement burnside_unit(const GroupId& g) { return burnside_constant(g, Rat(1)); }
inline BurnsideElement burnside_zero(const GroupId& g) { return burnside_constant(g, Rat(0)); }

// Indicator idempotent of a clopen subset of PhiG.
BurnsideElement e_U(const GroupId& g, const ClopenSet& u);

BurnsideElement ring_add(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement ring_mul(const BurnsideElement& a, const BurnsideElement& b);
BurnsideElement ring_scale(const Rat& c, const BurnsideElement& a);

// Marks of a transitive-basis vector as a function on PhiG (finite groups).
BurnsideElement to_function(const GroupId& g, const RatVec& coeffs);

}  // namespace ttg
