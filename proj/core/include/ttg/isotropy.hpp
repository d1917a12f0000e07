#pragma once

#include <memory>

#include "ttg/phi_space.hpp"

namespace ttg {

// Formal spectrum expression. Leaves are the unit sphere, natural cells
// G/K+, basic cells sigma_{K,U} with U kept in integer-cutoff form, the
// single-class isotropy spectra, and the zero spectrum; nodes are wedge,
// smash, suspension and Spanier-Whitehead duality.
struct SpectrumExpr;
using ExprPtr = std::shared_ptr<const SpectrumExpr>;

struct SpectrumExpr {
  enum class Node { Zero, Sphere0, Cell, Basic, IsoClass, Wedge, Smash, Susp, Dual };
  Node node = Node::Sphere0;
  SubgroupClass cls{};  // Cell / Basic / IsoClass
  int cutoff = 1;       // Basic
  int shift = 0;        // Susp
  ExprPtr a, b;
};

namespace expr {
ExprPtr zero();
ExprPtr sphere0();
ExprPtr cell(SubgroupClass k);
ExprPtr basic(SubgroupClass k, int cutoff);
ExprPtr isoclass(SubgroupClass k);
ExprPtr wedge(ExprPtr a, ExprPtr b);
ExprPtr smash(ExprPtr a, ExprPtr b);
ExprPtr susp(int n, ExprPtr a);
ExprPtr dual(ExprPtr a);  // requires a finite operand
}  // namespace expr

bool expr_is_finite(const ExprPtr& e);  // no isoclass leaves
std::string expr_str(const ExprPtr& e);

// Geometric isotropy / Balmer support of an expression; the flag records
// whether the set is closed under cotoral specialization (always true for
// finite expressions).
struct IsotropySet {
  ClassSet set;
  bool cotorally_closed = true;
};

IsotropySet support(const GroupId& g, const ExprPtr& e);

ClassSet lambda_ct(const ClassSet& s);
ClassSet ctmax(const ClassSet& s);
bool is_cotorally_closed(const ClassSet& s);

bool is_realizable(const ClassSet& s);
ExprPtr realize(const GroupId& g, const ClassSet& s);

struct BalmerPrime {
  GroupId group;
  SubgroupClass k;
};

bool prime_leq(const BalmerPrime& p, const BalmerPrime& q);
IsotropySet point_closure(const GroupId& g, SubgroupClass k);

bool in_thickt(const GroupId& g, const ExprPtr& y, const ExprPtr& x);
bool loct_equal(const GroupId& g, const ExprPtr& x, const ExprPtr& y);

std::pair<ExprPtr, ExprPtr> separate(const GroupId& g, SubgroupClass k1, SubgroupClass k2);

bool is_zariski_closed(const ClassSet& s);
ClassSet zariski_closure(const ClassSet& s);

}  // namespace ttg
