#pragma once

#include <optional>

#include "ttg/class_set.hpp"

namespace ttg {

// The space PhiG of conjugacy classes with finite Weyl group. In the
// catalogue it is a finite discrete set, a point, or a disjoint union of
// isolated points and one convergent sequence with its limit.
struct PhiSpace {
  GroupId group;
  std::vector<SubgroupClass> isolated;
  struct Sequence {
    ClassKind series;
    int start;
    SubgroupClass limit;
    bool operator==(const Sequence&) const = default;
  };
  std::optional<Sequence> sequence;

  ClassSet carrier() const;  // PhiG as a class-set descriptor
  bool operator==(const PhiSpace&) const = default;
};

PhiSpace phi(const GroupId& g);

// Open-and-closed subset of PhiG: membership bits on isolated points, finite
// or cofinite index set on the sequence; the limit belongs exactly when the
// tail is cofinite.
struct ClopenSet {
  PhiSpace space;
  ClassSet set;

  bool contains(SubgroupClass k) const { return set.contains(k); }
  bool operator==(const ClopenSet&) const = default;
};

// Validates the clopen invariants over the given space.
ClopenSet make_clopen(const PhiSpace& space, const ClassSet& set);
ClopenSet clopen_empty(const PhiSpace& space);
ClopenSet clopen_all(const PhiSpace& space);

ClopenSet clopen_union(const ClopenSet& a, const ClopenSet& b);
ClopenSet clopen_intersect(const ClopenSet& a, const ClopenSet& b);
ClopenSet clopen_complement(const ClopenSet& a);

// Clopen neighborhood of K inside PhiK, in integer-cutoff form: the singleton
// {K} when K is isolated in PhiK, otherwise the sequence tail from the cutoff
// together with the limit K.
struct BasicNbhd {
  ClassModel model;  // model of K whose Phi carries the neighborhood
  ClopenSet u;
};
BasicNbhd basic_nbhd(const GroupId& g, SubgroupClass k, int cutoff);

// f-topology predicates on normalized descriptors over the full class set.
bool is_f_open(const ClassSet& s);
bool is_f_compact(const ClassSet& s);

// Lemma-4.4 separating clopen set: U in Phi(N_G(K)) whose cotoral cone picks
// out K among its G-conjugates inside the normalizer.
struct SeparatingClopen {
  GroupId normalizer_model;
  ClopenSet u;
};
SeparatingClopen separating_clopen(const GroupId& g, SubgroupClass k);

}  // namespace ttg
