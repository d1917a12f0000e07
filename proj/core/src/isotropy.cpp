#include "ttg/isotropy.hpp"

#include <algorithm>

namespace ttg {

namespace expr {

namespace {
ExprPtr mk(SpectrumExpr e) { return std::make_shared<const SpectrumExpr>(std::move(e)); }
}  // namespace

ExprPtr zero() { return mk({SpectrumExpr::Node::Zero}); }
ExprPtr sphere0() { return mk({SpectrumExpr::Node::Sphere0}); }
ExprPtr cell(SubgroupClass k) {
  SpectrumExpr e{SpectrumExpr::Node::Cell};
  e.cls = k;
  return mk(std::move(e));
}
ExprPtr basic(SubgroupClass k, int cutoff) {
  SpectrumExpr e{SpectrumExpr::Node::Basic};
  e.cls = k;
  e.cutoff = cutoff;
  return mk(std::move(e));
}
ExprPtr isoclass(SubgroupClass k) {
  SpectrumExpr e{SpectrumExpr::Node::IsoClass};
  e.cls = k;
  return mk(std::move(e));
}
ExprPtr wedge(ExprPtr a, ExprPtr b) {
  SpectrumExpr e{SpectrumExpr::Node::Wedge};
  e.a = std::move(a);
  e.b = std::move(b);
  return mk(std::move(e));
}
ExprPtr smash(ExprPtr a, ExprPtr b) {
  SpectrumExpr e{SpectrumExpr::Node::Smash};
  e.a = std::move(a);
  e.b = std::move(b);
  return mk(std::move(e));
}
ExprPtr susp(int n, ExprPtr a) {
  SpectrumExpr e{SpectrumExpr::Node::Susp};
  e.shift = n;
  e.a = std::move(a);
  return mk(std::move(e));
}
ExprPtr dual(ExprPtr a) {
  if (!expr_is_finite(a)) fail(Errc::NotFinite, "dual is only defined on finite expressions");
  SpectrumExpr e{SpectrumExpr::Node::Dual};
  e.a = std::move(a);
  return mk(std::move(e));
}

}  // namespace expr

bool expr_is_finite(const ExprPtr& e) {
  if (!e) fail(Errc::MalformedExpr, "null expression");
  switch (e->node) {
    case SpectrumExpr::Node::IsoClass: return false;
    case SpectrumExpr::Node::Wedge:
    case SpectrumExpr::Node::Smash: return expr_is_finite(e->a) && expr_is_finite(e->b);
    case SpectrumExpr::Node::Susp:
    case SpectrumExpr::Node::Dual: return expr_is_finite(e->a);
    default: return true;
  }
}

std::string expr_str(const ExprPtr& e) {
  if (!e) fail(Errc::MalformedExpr, "null expression");
  switch (e->node) {
    case SpectrumExpr::Node::Zero: return "0";
    case SpectrumExpr::Node::Sphere0: return "S0";
    case SpectrumExpr::Node::Cell: return "cell(" + class_name(e->cls) + ")";
    case SpectrumExpr::Node::Basic:
      return "basic(" + class_name(e->cls) + ", " + std::to_string(e->cutoff) + ")";
    case SpectrumExpr::Node::IsoClass: return "iso(" + class_name(e->cls) + ")";
    case SpectrumExpr::Node::Wedge: return "wedge(" + expr_str(e->a) + ", " + expr_str(e->b) + ")";
    case SpectrumExpr::Node::Smash: return "smash(" + expr_str(e->a) + ", " + expr_str(e->b) + ")";
    case SpectrumExpr::Node::Susp:
      return "susp(" + std::to_string(e->shift) + ", " + expr_str(e->a) + ")";
    case SpectrumExpr::Node::Dual: return "dual(" + expr_str(e->a) + ")";
  }
  fail(Errc::MalformedExpr, "unknown node");
}

ClassSet lambda_ct(const ClassSet& s) {
  ClassSet out = s;
  auto circ = circle_like_class(s.group);
  if (circ && s.contains(*circ)) out.c = {true, {}};
  return out;
}

bool is_cotorally_closed(const ClassSet& s) { return lambda_ct(s) == s; }

ClassSet ctmax(const ClassSet& s) {
  ClassSet out = s;
  auto circ = circle_like_class(s.group);
  if (circ && s.contains(*circ)) out.c = {};  // every cyclic class is cotoral in the circle
  return out;
}

namespace {

// Subconjugacy down-set of a class, as a normalized descriptor.
ClassSet subconj_down_set(const GroupId& g, SubgroupClass k) {
  require_valid_class(g, k);
  ClassSet s = ClassSet::empty(g);
  if (k.kind == ClassKind::Full) return ClassSet::all(g);
  switch (g.kind) {
    case GroupKind::Circle:
      for (int d : divisors(k.n)) s.insert(class_C(d));
      return s;
    case GroupKind::Finite:
      for (int i = 0; i < static_cast<int>(g.finite->classes.size()); ++i)
        if (is_subconjugate(g, class_finite(i), k)) s.insert(class_finite(i));
      return s;
    case GroupKind::O2:
      switch (k.kind) {
        case ClassKind::C:
          for (int d : divisors(k.n)) s.insert(class_C(d));
          return s;
        case ClassKind::D:
          for (int d : divisors(k.n)) {
            s.insert(class_C(d));
            s.insert(class_D(d));
          }
          return s;
        case ClassKind::SO2:
          s.c = {true, {}};
          s.insert(class_SO2());
          return s;
        default: return s;
      }
    case GroupKind::SO3:
      switch (k.kind) {
        case ClassKind::C:
          for (int d : divisors(k.n)) s.insert(class_C(d));
          return s;
        case ClassKind::D:
          for (int d : divisors(k.n)) {
            s.insert(class_C(d));
            if (d >= 2) s.insert(class_D(d));
          }
          s.insert(class_C(2));  // half turns
          return s;
        case ClassKind::SO2:
          s.c = {true, {}};
          s.insert(class_SO2());
          return s;
        case ClassKind::O2:
          s.c = {true, {}};
          s.d = {true, {}};
          s.insert(class_SO2());
          s.insert(class_O2());
          return s;
        case ClassKind::Tetra:
          return ClassSet::of(g, {class_C(1), class_C(2), class_C(3), class_D(2), class_tetra()});
        case ClassKind::Octa:
          return ClassSet::of(g, {class_C(1), class_C(2), class_C(3), class_C(4), class_D(2),
                                  class_D(3), class_D(4), class_tetra(), class_octa()});
        case ClassKind::Icosa:
          return ClassSet::of(g, {class_C(1), class_C(2), class_C(3), class_C(5), class_D(2),
                                  class_D(3), class_D(5), class_tetra(), class_icosa()});
        default: return s;
      }
  }
  return s;
}

// G-classes of the members of the cutoff-form basic neighborhood of K,
// computed symbolically (fusion of Phi K back into ambient classes).
ClassSet basic_members(const GroupId& g, SubgroupClass k, int cutoff) {
  require_valid_class(g, k);
  ClassSet s = ClassSet::empty(g);
  auto limit = d_series_limit(g);
  if (limit && k == *limit) {
    if (g.kind == GroupKind::O2) {
      // Phi O2 = {SO2} + (D(n) -> O2); the neighborhood is the tail with O2
      int start = std::max(cutoff, 1);
      SeriesPart tail{true, {}};
      for (int i = 1; i < start; ++i) tail.idx.insert(i);
      s.d = tail;
      s.insert(class_full());
      return s;
    }
    // O2 class inside SO3: the model tail fuses D(1) to the half-turn class C2
    SeriesPart tail{true, {}};
    for (int i = 2; i < std::max(cutoff, 2); ++i) tail.idx.insert(i);
    s.d = tail;
    s.insert(class_O2());
    if (cutoff <= 1) s.insert(class_C(2));
    return s;
  }
  s.insert(k);
  return s;
}

}  // namespace

IsotropySet support(const GroupId& g, const ExprPtr& e) {
  if (!e) fail(Errc::MalformedExpr, "null expression");
  ClassSet s = ClassSet::empty(g);
  switch (e->node) {
    case SpectrumExpr::Node::Zero: break;
    case SpectrumExpr::Node::Sphere0: s = ClassSet::all(g); break;
    case SpectrumExpr::Node::Cell: s = subconj_down_set(g, e->cls); break;
    case SpectrumExpr::Node::Basic: s = lambda_ct(basic_members(g, e->cls, e->cutoff)); break;
    case SpectrumExpr::Node::IsoClass:
      require_valid_class(g, e->cls);
      s = ClassSet::of(g, {e->cls});
      break;
    case SpectrumExpr::Node::Wedge:
      s = set_union(support(g, e->a).set, support(g, e->b).set);
      break;
    case SpectrumExpr::Node::Smash:
      s = set_intersect(support(g, e->a).set, support(g, e->b).set);
      break;
    case SpectrumExpr::Node::Susp:
    case SpectrumExpr::Node::Dual: s = support(g, e->a).set; break;
  }
  return IsotropySet{s, is_cotorally_closed(s)};
}

bool is_realizable(const ClassSet& s) {
  if (!is_cotorally_closed(s)) return false;
  ClassSet m = ctmax(s);
  return is_f_open(m) && is_f_compact(m);
}

ExprPtr realize(const GroupId& g, const ClassSet& s) {
  if (!(s.group == g)) fail(Errc::SpaceMismatch, "descriptor over the wrong group");
  if (!is_realizable(s)) fail(Errc::NotRealizable, "set is not the support of a finite spectrum");
  if (s == ClassSet::all(g)) return expr::sphere0();

  ClassSet m = ctmax(s);
  std::vector<ExprPtr> cells;
  auto limit = d_series_limit(g);

  // cyclic part of the maximal set is finite here (compactness)
  for (int n : m.c.idx) cells.push_back(expr::basic(class_C(n), 1));

  if (m.d.cofinite) {
    // tail with its limit: one basic cell from the first full-tail index,
    // plus singletons for members below it
    int start = series_start(g, ClassKind::D);
    int from = m.d.idx.empty() ? start : *m.d.idx.rbegin() + 1;
    for (int n = start; n < from; ++n)
      if (m.d.contains(n)) cells.push_back(expr::basic(class_D(n), 1));
    cells.push_back(expr::basic(*limit, std::max(from, g.kind == GroupKind::SO3 ? 2 : 1)));
  } else {
    for (int n : m.d.idx) cells.push_back(expr::basic(class_D(n), 1));
  }

  for (SubgroupClass k : m.specials) {
    if (limit && k == *limit && m.d.cofinite) continue;  // already covered by the tail cell
    cells.push_back(expr::basic(k, 1));
  }

  if (cells.empty()) {
    // the zero spectrum is the empty wedge
    return expr::zero();
  }
  ExprPtr out = cells.front();
  for (std::size_t i = 1; i < cells.size(); ++i) out = expr::wedge(out, cells[i]);
  return out;
}

bool prime_leq(const BalmerPrime& p, const BalmerPrime& q) {
  if (!(p.group == q.group)) fail(Errc::GroupMismatch, "primes of different groups");
  return is_cotoral(p.group, p.k, q.k);
}

IsotropySet point_closure(const GroupId& g, SubgroupClass k) {
  require_valid_class(g, k);
  ClassSet s = lambda_ct(ClassSet::of(g, {k}));
  return IsotropySet{s, true};
}

bool in_thickt(const GroupId& g, const ExprPtr& y, const ExprPtr& x) {
  if (!expr_is_finite(y) || !expr_is_finite(x))
    fail(Errc::NotFinite, "thick tensor ideal membership needs finite expressions");
  return set_subset(support(g, y).set, support(g, x).set);
}

bool loct_equal(const GroupId& g, const ExprPtr& x, const ExprPtr& y) {
  return support(g, x).set == support(g, y).set;
}

std::pair<ExprPtr, ExprPtr> separate(const GroupId& g, SubgroupClass k1, SubgroupClass k2) {
  require_valid_class(g, k1);
  require_valid_class(g, k2);
  ClassSet c1 = lambda_ct(ClassSet::of(g, {k1}));
  ClassSet c2 = lambda_ct(ClassSet::of(g, {k2}));
  if (!set_intersect(c1, c2).is_empty())
    fail(Errc::NotUnrelated, class_name(k1) + " and " + class_name(k2) + " share a cotoral cone");
  auto limit = d_series_limit(g);
  auto cell_for = [&](SubgroupClass k, const ClassSet& other) -> ExprPtr {
    int cutoff = series_start(g, ClassKind::D);
    if (limit && k == *limit) {
      // shrink the neighborhood until its tail clears the other cone; the
      // cone of a single unrelated class has a finite dihedral part
      if (!other.d.idx.empty() && !other.d.cofinite) cutoff = std::max(cutoff, *other.d.idx.rbegin() + 1);
      if (g.kind == GroupKind::SO3 && cutoff <= 1 && other.contains(class_C(2))) cutoff = 2;
    }
    return expr::basic(k, cutoff);
  };
  ExprPtr x1 = cell_for(k1, c2);
  ExprPtr x2 = cell_for(k2, c1);
  return {x1, x2};
}

namespace {
// Zariski-closed sets are intersections of finite unions of basic-cell
// supports; on normalized descriptors this reduces to three closure rules.
bool closure_step(ClassSet& s) {
  bool changed = false;
  ClassSet ct = lambda_ct(s);
  if (!(ct == s)) {
    s = ct;
    changed = true;
  }
  auto circ = circle_like_class(s.group);
  if (s.c.cofinite && circ && !s.contains(*circ)) {
    s.insert(*circ);
    changed = true;
  }
  auto limit = d_series_limit(s.group);
  if (s.d.cofinite && limit && !s.contains(*limit)) {
    s.insert(*limit);
    changed = true;
  }
  return changed;
}
}  // namespace

bool is_zariski_closed(const ClassSet& s) {
  ClassSet t = s;
  return !closure_step(t);
}

ClassSet zariski_closure(const ClassSet& s) {
  ClassSet t = s;
  while (closure_step(t)) {
  }
  return t;
}

}  // namespace ttg
