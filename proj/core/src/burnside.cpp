#include "ttg/burnside.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace ttg {

namespace {
void require_finite(const GroupId& g) {
  if (g.kind != GroupKind::Finite) fail(Errc::NotFinite, "operation requires a finite group");
}
}  // namespace

MarksMatrix marks_matrix(const GroupId& g) {
  require_finite(g);
  const auto& fg = *g.finite;
  int nc = static_cast<int>(fg.classes.size());
  MarksMatrix out{g, {}, Matrix(nc, nc)};
  for (int i = 0; i < nc; ++i) out.basis.push_back(class_finite(i));

  for (int kc = 0; kc < nc; ++kc) {
    Mask krep = fg.classes[kc].rep;
    // coset representatives of K in G
    std::vector<int> reps;
    std::vector<bool> covered(fg.n, false);
    std::vector<Mask> cosets;
    for (int a = 0; a < fg.n; ++a) {
      if (covered[a]) continue;
      Mask coset = 0;
      for (int s = 0; s < fg.n; ++s)
        if (krep >> s & 1) {
          int x = fg.mul(a, s);
          coset |= Mask(1) << x;
          covered[x] = true;
        }
      cosets.push_back(coset);
    }
    for (int lc = 0; lc < nc; ++lc) {
      Mask lrep = fg.classes[lc].rep;
      int fixed = 0;
      for (Mask coset : cosets) {
        int a = std::countr_zero(coset);
        bool fix = true;
        for (int l = 0; l < fg.n && fix; ++l) {
          if (!(lrep >> l & 1)) continue;
          if (!(coset >> fg.mul(l, a) & 1)) fix = false;
        }
        if (fix) ++fixed;
      }
      out.m[lc][kc] = fixed;
    }
  }
  return out;
}

RatVec primitive_idempotent(const GroupId& g, SubgroupClass l) {
  require_finite(g);
  require_valid_class(g, l);
  MarksMatrix mm = marks_matrix(g);
  std::size_t n = mm.basis.size();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = mm.m[i][j];
  aug[static_cast<std::size_t>(l.n)][n] = 1;
  rref(aug);
  if (aug.rows() != n) fail(Errc::NotFinite, "marks matrix is singular");
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

Rat mark_of(const GroupId& g, const RatVec& coeffs, SubgroupClass l) {
  require_finite(g);
  require_valid_class(g, l);
  MarksMatrix mm = marks_matrix(g);
  if (coeffs.size() != mm.basis.size())
    fail(Errc::MalformedDescriptor, "coefficient vector has wrong length");
  Rat out(0);
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out += coeffs[k] * mm.m[static_cast<std::size_t>(l.n)][k];
  return out;
}

Rat BurnsideElement::value_at(SubgroupClass k) const {
  for (const auto& [v, cell] : chart)
    if (cell.contains(k)) return v;
  fail(Errc::InvalidClass, "class not in Phi of this group");
}

namespace {
BurnsideElement normalize(PhiSpace space, std::vector<std::pair<Rat, ClopenSet>> cells) {
  std::map<Rat, ClassSet> merged;
  for (auto& [v, cell] : cells) {
    if (cell.set.is_empty()) continue;
    auto it = merged.find(v);
    if (it == merged.end())
      merged.emplace(v, cell.set);
    else
      it->second = set_union(it->second, cell.set);
  }
  BurnsideElement out{std::move(space), {}};
  for (auto& [v, s] : merged) out.chart.emplace_back(v, make_clopen(out.space, s));
  return out;
}
}  // namespace

BurnsideElement burnside_constant(const GroupId& g, const Rat& value) {
  PhiSpace space = phi(g);
  return normalize(space, {{value, clopen_all(space)}});
}

BurnsideElement e_U(const GroupId& g, const ClopenSet& u) {
  PhiSpace space = phi(g);
  if (!(u.space == space)) fail(Errc::SpaceMismatch, "clopen set is not over Phi of this group");
  return normalize(space, {{Rat(1), u}, {Rat(0), clopen_complement(u)}});
}

namespace {
BurnsideElement pointwise(const BurnsideElement& a, const BurnsideElement& b, bool add) {
  if (!(a.space == b.space)) fail(Errc::SpaceMismatch, "elements over different groups");
  std::vector<std::pair<Rat, ClopenSet>> cells;
  for (const auto& [va, ca] : a.chart)
    for (const auto& [vb, cb] : b.chart) {
      ClopenSet c = clopen_intersect(ca, cb);
      if (c.set.is_empty()) continue;
      cells.emplace_back(add ? Rat(va + vb) : Rat(va * vb), c);
    }
  return normalize(a.space, std::move(cells));
}
}  // namespace

BurnsideElement ring_add(const BurnsideElement& a, const BurnsideElement& b) { return pointwise(a, b, true); }
BurnsideElement ring_mul(const BurnsideElement& a, const BurnsideElement& b) { return pointwise(a, b, false); }

BurnsideElement ring_scale(const Rat& c, const BurnsideElement& a) {
  std::vector<std::pair<Rat, ClopenSet>> cells;
  for (const auto& [v, cell] : a.chart) cells.emplace_back(c * v, cell);
  return normalize(a.space, std::move(cells));
}

BurnsideElement to_function(const GroupId& g, const RatVec& coeffs) {
  require_finite(g);
  PhiSpace space = phi(g);
  MarksMatrix mm = marks_matrix(g);
  if (coeffs.size() != mm.basis.size())
    fail(Errc::MalformedDescriptor, "coefficient vector has wrong length");
  std::vector<std::pair<Rat, ClopenSet>> cells;
  for (std::size_t l = 0; l < mm.basis.size(); ++l) {
    Rat v(0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) v += coeffs[k] * mm.m[l][k];
    ClassSet cell = ClassSet::of(g, {mm.basis[l]});
    cells.emplace_back(v, make_clopen(space, cell));
  }
  return normalize(space, std::move(cells));
}

}  // namespace ttg
