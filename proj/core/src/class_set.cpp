#include "ttg/class_set.hpp"

#include <algorithm>

namespace ttg {

namespace {
std::set<int> set_minus(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}
std::set<int> set_and(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}
std::set<int> set_or(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out = a;
  out.insert(b.begin(), b.end());
  return out;
}
}  // namespace

SeriesPart series_union(const SeriesPart& a, const SeriesPart& b) {
  if (!a.cofinite && !b.cofinite) return {false, set_or(a.idx, b.idx)};
  if (a.cofinite && b.cofinite) return {true, set_and(a.idx, b.idx)};
  const SeriesPart& fin = a.cofinite ? b : a;
  const SeriesPart& cof = a.cofinite ? a : b;
  return {true, set_minus(cof.idx, fin.idx)};
}

SeriesPart series_intersect(const SeriesPart& a, const SeriesPart& b) {
  if (!a.cofinite && !b.cofinite) return {false, set_and(a.idx, b.idx)};
  if (a.cofinite && b.cofinite) return {true, set_or(a.idx, b.idx)};
  const SeriesPart& fin = a.cofinite ? b : a;
  const SeriesPart& cof = a.cofinite ? a : b;
  return {false, set_minus(fin.idx, cof.idx)};
}

SeriesPart series_complement(const SeriesPart& a) { return {!a.cofinite, a.idx}; }

bool series_subset(const SeriesPart& a, const SeriesPart& b) {
  if (!a.cofinite && !b.cofinite) return std::includes(b.idx.begin(), b.idx.end(), a.idx.begin(), a.idx.end());
  if (!a.cofinite && b.cofinite) return set_and(a.idx, b.idx).empty();
  if (a.cofinite && !b.cofinite) return false;
  return std::includes(a.idx.begin(), a.idx.end(), b.idx.begin(), b.idx.end());
}

ClassSet ClassSet::all(const GroupId& g) {
  ClassSet s = ClassSet::empty(g);
  if (has_series(g, ClassKind::C)) s.c = {true, {}};
  if (has_series(g, ClassKind::D)) s.d = {true, {}};
  for (SubgroupClass sp : special_classes(g)) s.specials.insert(sp);
  return s;
}

ClassSet ClassSet::of(const GroupId& g, const std::vector<SubgroupClass>& members) {
  ClassSet s = ClassSet::empty(g);
  for (SubgroupClass k : members) s.insert(k);
  return s;
}

bool ClassSet::contains(SubgroupClass k) const {
  if (!valid_class(group, k)) return false;
  switch (k.kind) {
    case ClassKind::C: return c.contains(k.n);
    case ClassKind::D: return d.contains(k.n);
    default: return specials.count(k) > 0;
  }
}

void ClassSet::insert(SubgroupClass k) {
  require_valid_class(group, k);
  switch (k.kind) {
    case ClassKind::C:
      if (c.cofinite)
        c.idx.erase(k.n);
      else
        c.idx.insert(k.n);
      break;
    case ClassKind::D:
      if (d.cofinite)
        d.idx.erase(k.n);
      else
        d.idx.insert(k.n);
      break;
    default: specials.insert(k);
  }
}

std::vector<SubgroupClass> ClassSet::members_up_to(int bound) const {
  std::vector<SubgroupClass> out;
  if (has_series(group, ClassKind::C))
    for (int n = series_start(group, ClassKind::C); n <= bound; ++n)
      if (c.contains(n)) out.push_back(class_C(n));
  if (has_series(group, ClassKind::D))
    for (int n = series_start(group, ClassKind::D); n <= bound; ++n)
      if (d.contains(n)) out.push_back(class_D(n));
  for (SubgroupClass k : special_classes(group))
    if (specials.count(k)) out.push_back(k);
  return out;
}

void require_same_group(const ClassSet& a, const ClassSet& b) {
  if (!(a.group == b.group)) fail(Errc::SpaceMismatch, "descriptors over different groups");
}

ClassSet set_union(const ClassSet& a, const ClassSet& b) {
  require_same_group(a, b);
  ClassSet s = ClassSet::empty(a.group);
  s.c = series_union(a.c, b.c);
  s.d = series_union(a.d, b.d);
  s.specials = a.specials;
  s.specials.insert(b.specials.begin(), b.specials.end());
  return s;
}

ClassSet set_intersect(const ClassSet& a, const ClassSet& b) {
  require_same_group(a, b);
  ClassSet s = ClassSet::empty(a.group);
  s.c = series_intersect(a.c, b.c);
  s.d = series_intersect(a.d, b.d);
  for (SubgroupClass k : a.specials)
    if (b.specials.count(k)) s.specials.insert(k);
  return s;
}

ClassSet set_complement(const ClassSet& a) {
  ClassSet s = ClassSet::empty(a.group);
  if (has_series(a.group, ClassKind::C)) s.c = series_complement(a.c);
  if (has_series(a.group, ClassKind::D)) s.d = series_complement(a.d);
  for (SubgroupClass k : special_classes(a.group))
    if (!a.specials.count(k)) s.specials.insert(k);
  return s;
}

ClassSet set_difference(const ClassSet& a, const ClassSet& b) {
  return set_intersect(a, set_complement(b));
}

bool set_subset(const ClassSet& a, const ClassSet& b) {
  require_same_group(a, b);
  return series_subset(a.c, b.c) && series_subset(a.d, b.d) &&
         std::includes(b.specials.begin(), b.specials.end(), a.specials.begin(), a.specials.end());
}

}  // namespace ttg
