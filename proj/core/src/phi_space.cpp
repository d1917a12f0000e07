#include "ttg/phi_space.hpp"

namespace ttg {

PhiSpace phi(const GroupId& g) {
  PhiSpace p;
  p.group = g;
  switch (g.kind) {
    case GroupKind::Circle:
      p.isolated = {class_full()};
      break;
    case GroupKind::O2:
      p.isolated = {class_SO2()};
      p.sequence = PhiSpace::Sequence{ClassKind::D, 1, class_full()};
      break;
    case GroupKind::SO3:
      p.isolated = {class_SO2(), class_tetra(), class_octa(), class_icosa(), class_full()};
      p.sequence = PhiSpace::Sequence{ClassKind::D, 2, class_O2()};
      break;
    case GroupKind::Finite:
      for (SubgroupClass k : special_classes(g)) p.isolated.push_back(k);
      break;
  }
  return p;
}

ClassSet PhiSpace::carrier() const {
  ClassSet s = ClassSet::empty(group);
  for (SubgroupClass k : isolated) s.insert(k);
  if (sequence) {
    s.d = {true, {}};
    s.insert(sequence->limit);
  }
  return s;
}

ClopenSet make_clopen(const PhiSpace& space, const ClassSet& set) {
  if (!(set.group == space.group)) fail(Errc::SpaceMismatch, "clopen set over the wrong group");
  if (!set_subset(set, space.carrier()))
    fail(Errc::MalformedDescriptor, "clopen set contains classes outside Phi");
  if (space.sequence) {
    bool has_limit = set.contains(space.sequence->limit);
    if (has_limit != set.d.cofinite)
      fail(Errc::MalformedDescriptor,
           "clopen set must contain the sequence limit exactly when it contains a tail");
  }
  return ClopenSet{space, set};
}

ClopenSet clopen_empty(const PhiSpace& space) { return ClopenSet{space, ClassSet::empty(space.group)}; }
ClopenSet clopen_all(const PhiSpace& space) { return ClopenSet{space, space.carrier()}; }

namespace {
void require_same_space(const ClopenSet& a, const ClopenSet& b) {
  if (!(a.space == b.space)) fail(Errc::SpaceMismatch, "clopen sets over different spaces");
}
}  // namespace

ClopenSet clopen_union(const ClopenSet& a, const ClopenSet& b) {
  require_same_space(a, b);
  return make_clopen(a.space, set_union(a.set, b.set));
}

ClopenSet clopen_intersect(const ClopenSet& a, const ClopenSet& b) {
  require_same_space(a, b);
  return make_clopen(a.space, set_intersect(a.set, b.set));
}

ClopenSet clopen_complement(const ClopenSet& a) {
  return make_clopen(a.space, set_intersect(set_complement(a.set), a.space.carrier()));
}

BasicNbhd basic_nbhd(const GroupId& g, SubgroupClass k, int cutoff) {
  require_valid_class(g, k);
  ClassModel model = model_of_class(g, k);
  PhiSpace space = phi(model.model);
  ClassSet u = ClassSet::empty(model.model);
  if (space.sequence && model.top == space.sequence->limit) {
    int start = std::max(cutoff, space.sequence->start);
    SeriesPart tail{true, {}};
    for (int i = space.sequence->start; i < start; ++i) tail.idx.insert(i);
    u.d = tail;
    u.insert(space.sequence->limit);
  } else {
    u.insert(model.top);
  }
  return BasicNbhd{model, make_clopen(space, u)};
}

bool is_f_open(const ClassSet& s) {
  auto limit = d_series_limit(s.group);
  if (!limit || !s.contains(*limit)) return true;
  return s.d.cofinite;  // a neighborhood of the limit needs a dihedral tail
}

bool is_f_compact(const ClassSet& s) {
  if (s.c.cofinite) return false;  // infinitely many isolated cyclic classes
  if (s.d.cofinite) {
    auto limit = d_series_limit(s.group);
    return limit && s.contains(*limit);
  }
  return true;
}

SeparatingClopen separating_clopen(const GroupId& g, SubgroupClass k) {
  require_valid_class(g, k);
  if (g.kind == GroupKind::Finite) {
    const auto& fg = *g.finite;
    Mask rep = fg.classes[k.n].rep;
    Mask nmask = 0;
    for (int a = 0; a < fg.n; ++a)
      if (fg.conjugate(rep, a) == rep) nmask |= Mask(1) << a;
    // model of the normalizer as its own group
    std::vector<int> elems;
    for (int a = 0; a < fg.n; ++a)
      if (nmask >> a & 1) elems.push_back(a);
    std::vector<int> pos(fg.n, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = pos[fg.mul(elems[i], elems[j])];
    GroupId nmodel{GroupKind::Finite, make_finite_group(t, group_name(g) + ":N(" + class_name(k) + ")")};
    Mask krep_in_n = 0;
    for (int a = 0; a < fg.n; ++a)
      if (rep >> a & 1) krep_in_n |= Mask(1) << pos[a];
    int cls = nmodel.finite->class_of(krep_in_n);
    ClassSet u = ClassSet::of(nmodel, {class_finite(cls)});
    return SeparatingClopen{nmodel, make_clopen(phi(nmodel), u)};
  }
  if (g.kind == GroupKind::SO3 && k == class_C(2)) {
    // N = O2; C2 is cotoral in SO2 while the reflection conjugates are not
    GroupId n = o2_group();
    ClassSet u = ClassSet::of(n, {class_SO2()});
    return SeparatingClopen{n, make_clopen(phi(n), u)};
  }
  if (g.kind == GroupKind::SO3 && k == class_tetra()) {
    // N = Octa, modeled by S4; Phi is discrete and U is the A4 class
    ClassModel octa = model_of_class(g, class_octa());
    const auto& classes = octa.model.finite->classes;
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
      if (classes[i].order == 12) {
        ClassSet u = ClassSet::of(octa.model, {class_finite(i)});
        return SeparatingClopen{octa.model, make_clopen(phi(octa.model), u)};
      }
    }
    fail(Errc::UnsupportedInstance, "A4 class not found in S4 model");
  }
  fail(Errc::UnsupportedInstance,
       "separating clopen supported for finite groups, (SO3, C2) and (SO3, A4)");
}

}  // namespace ttg
