#pragma once

#include <set>
#include <vector>

#include "ttg/group_catalog.hpp"

namespace ttg {

// One infinite series (C or D) of a set descriptor: either an explicit finite
// index set or the complement of one within {n >= series start}.
struct SeriesPart {
  bool cofinite = false;
  std::set<int> idx;  // members when finite, exceptions when cofinite

  bool contains(int n) const { return cofinite ? !idx.count(n) : idx.count(n) > 0; }
  bool is_empty() const { return !cofinite && idx.empty(); }
  bool operator==(const SeriesPart&) const = default;
};

SeriesPart series_union(const SeriesPart& a, const SeriesPart& b);
SeriesPart series_intersect(const SeriesPart& a, const SeriesPart& b);
SeriesPart series_complement(const SeriesPart& a);
bool series_subset(const SeriesPart& a, const SeriesPart& b);

// Normalized class-set descriptor: finite or cofinite per series, explicit on
// the special classes. Closed under all Boolean operations used anywhere in
// the engine.
struct ClassSet {
  GroupId group;
  SeriesPart c, d;
  std::set<SubgroupClass> specials;

  static ClassSet empty(const GroupId& g) { return ClassSet{g, {}, {}, {}}; }
  static ClassSet all(const GroupId& g);
  static ClassSet of(const GroupId& g, const std::vector<SubgroupClass>& members);

  bool contains(SubgroupClass k) const;
  void insert(SubgroupClass k);
  bool is_empty() const { return c.is_empty() && d.is_empty() && specials.empty(); }
  bool is_finite() const { return !c.cofinite && !d.cofinite; }
  // All members with series index <= bound (specials always included).
  std::vector<SubgroupClass> members_up_to(int bound) const;

  bool operator==(const ClassSet&) const = default;
};

void require_same_group(const ClassSet& a, const ClassSet& b);

ClassSet set_union(const ClassSet& a, const ClassSet& b);
ClassSet set_intersect(const ClassSet& a, const ClassSet& b);
ClassSet set_complement(const ClassSet& a);
ClassSet set_difference(const ClassSet& a, const ClassSet& b);
bool set_subset(const ClassSet& a, const ClassSet& b);

}  // namespace ttg
