#include "ttg/group_catalog.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>

namespace ttg {

GroupId circle_group() { return {GroupKind::Circle, nullptr}; }
GroupId o2_group() { return {GroupKind::O2, nullptr}; }
GroupId so3_group() { return {GroupKind::SO3, nullptr}; }

GroupId load_finite_group(const std::vector<std::vector<int>>& table, std::string name) {
  if (table.size() > 48)
    fail(Errc::TooLarge, "finite groups are limited to order 48, got " + std::to_string(table.size()));
  return {GroupKind::Finite, make_finite_group(table, std::move(name))};
}

GroupId load_finite_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_finite_group(tables::from_file_format(ss.str()), path);
}

std::string group_name(const GroupId& g) {
  switch (g.kind) {
    case GroupKind::Circle: return "Circle";
    case GroupKind::O2: return "O2";
    case GroupKind::SO3: return "SO3";
    case GroupKind::Finite: return g.finite ? g.finite->name : "finite";
  }
  return "?";
}

std::string class_name(SubgroupClass k) {
  switch (k.kind) {
    case ClassKind::C: return "C" + std::to_string(k.n);
    case ClassKind::D: return "D" + std::to_string(k.n);
    case ClassKind::SO2: return "SO2";
    case ClassKind::O2: return "O2";
    case ClassKind::Tetra: return "A4";
    case ClassKind::Octa: return "S4";
    case ClassKind::Icosa: return "A5";
    case ClassKind::Full: return "G";
    case ClassKind::Finite: return "F" + std::to_string(k.n);
  }
  return "?";
}

bool has_series(const GroupId& g, ClassKind series) {
  switch (g.kind) {
    case GroupKind::Circle: return series == ClassKind::C;
    case GroupKind::O2:
    case GroupKind::SO3: return series == ClassKind::C || series == ClassKind::D;
    case GroupKind::Finite: return false;
  }
  return false;
}

int series_start(const GroupId& g, ClassKind series) {
  if (series == ClassKind::D && g.kind == GroupKind::SO3) return 2;
  return 1;
}

std::vector<SubgroupClass> special_classes(const GroupId& g) {
  switch (g.kind) {
    case GroupKind::Circle: return {class_full()};
    case GroupKind::O2: return {class_SO2(), class_full()};
    case GroupKind::SO3:
      return {class_SO2(), class_O2(), class_tetra(), class_octa(), class_icosa(), class_full()};
    case GroupKind::Finite: {
      std::vector<SubgroupClass> out;
      for (int i = 0; i < static_cast<int>(g.finite->classes.size()); ++i) out.push_back(class_finite(i));
      return out;
    }
  }
  return {};
}

std::optional<SubgroupClass> circle_like_class(const GroupId& g) {
  switch (g.kind) {
    case GroupKind::Circle: return class_full();
    case GroupKind::O2:
    case GroupKind::SO3: return class_SO2();
    case GroupKind::Finite: return std::nullopt;
  }
  return std::nullopt;
}

std::optional<SubgroupClass> d_series_limit(const GroupId& g) {
  switch (g.kind) {
    case GroupKind::O2: return class_full();
    case GroupKind::SO3: return class_O2();
    default: return std::nullopt;
  }
}

bool valid_class(const GroupId& g, SubgroupClass k) {
  switch (g.kind) {
    case GroupKind::Circle:
      return (k.kind == ClassKind::C && k.n >= 1) || k.kind == ClassKind::Full;
    case GroupKind::O2:
      return (k.kind == ClassKind::C && k.n >= 1) || (k.kind == ClassKind::D && k.n >= 1) ||
             k.kind == ClassKind::SO2 || k.kind == ClassKind::Full;
    case GroupKind::SO3:
      return (k.kind == ClassKind::C && k.n >= 1) || (k.kind == ClassKind::D && k.n >= 2) ||
             k.kind == ClassKind::SO2 || k.kind == ClassKind::O2 || k.kind == ClassKind::Tetra ||
             k.kind == ClassKind::Octa || k.kind == ClassKind::Icosa || k.kind == ClassKind::Full;
    case GroupKind::Finite:
      return k.kind == ClassKind::Finite && k.n >= 0 &&
             k.n < static_cast<int>(g.finite->classes.size());
  }
  return false;
}

void require_valid_class(const GroupId& g, SubgroupClass k) {
  if (!valid_class(g, k))
    fail(Errc::InvalidClass, "class " + class_name(k) + " is not valid for " + group_name(g));
}

std::vector<SubgroupClass> classes(const GroupId& g, int bound) {
  if (bound < 1) fail(Errc::MalformedDescriptor, "truncation bound must be >= 1");
  std::vector<SubgroupClass> out;
  if (has_series(g, ClassKind::C))
    for (int n = series_start(g, ClassKind::C); n <= bound; ++n) out.push_back(class_C(n));
  if (has_series(g, ClassKind::D))
    for (int n = series_start(g, ClassKind::D); n <= bound; ++n) out.push_back(class_D(n));
  for (SubgroupClass s : special_classes(g)) out.push_back(s);
  return out;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

namespace {

bool finite_subconjugate(const FiniteGroupData& g, int li, int ki) {
  const auto& l = g.classes[li];
  const auto& k = g.classes[ki];
  if (l.order > k.order || k.order % l.order != 0) return false;
  for (Mask m : l.orbit)
    if ((m & k.rep) == m) return true;
  return false;
}

bool so3_cyclic_in(SubgroupClass k, int m) {
  // is C(m) subconjugate to k, for the exceptional classes of SO(3)
  switch (k.kind) {
    case ClassKind::Tetra: return m <= 3;
    case ClassKind::Octa: return m <= 4;
    case ClassKind::Icosa: return m == 1 || m == 2 || m == 3 || m == 5;
    default: return false;
  }
}

bool so3_dihedral_in(SubgroupClass k, int m) {
  switch (k.kind) {
    case ClassKind::Tetra: return m == 2;
    case ClassKind::Octa: return m == 2 || m == 3 || m == 4;
    case ClassKind::Icosa: return m == 2 || m == 3 || m == 5;
    default: return false;
  }
}

}  // namespace

bool is_subconjugate(const GroupId& g, SubgroupClass l, SubgroupClass k) {
  require_valid_class(g, l);
  require_valid_class(g, k);
  if (l == k) return true;
  if (k.kind == ClassKind::Full) return true;
  if (l.kind == ClassKind::Full) return false;
  switch (g.kind) {
    case GroupKind::Finite:
      return finite_subconjugate(*g.finite, l.n, k.n);
    case GroupKind::Circle:
      return k.n % l.n == 0;  // both cyclic here
    case GroupKind::O2:
      if (l.kind == ClassKind::C) {
        if (k.kind == ClassKind::C || k.kind == ClassKind::D) return k.n % l.n == 0;
        return k.kind == ClassKind::SO2;
      }
      if (l.kind == ClassKind::D) return k.kind == ClassKind::D && k.n % l.n == 0;
      if (l.kind == ClassKind::SO2) return false;  // only SO2 and Full above it
      return false;
    case GroupKind::SO3:
      if (l.kind == ClassKind::C) {
        switch (k.kind) {
          case ClassKind::C: return k.n % l.n == 0;
          case ClassKind::D: return k.n % l.n == 0 || l.n == 2 || l.n == 1;
          case ClassKind::SO2:
          case ClassKind::O2: return true;
          default: return so3_cyclic_in(k, l.n);
        }
      }
      if (l.kind == ClassKind::D) {
        switch (k.kind) {
          case ClassKind::D: return k.n % l.n == 0;
          case ClassKind::O2: return true;
          default: return so3_dihedral_in(k, l.n);
        }
      }
      if (l.kind == ClassKind::SO2) return k.kind == ClassKind::O2;
      if (l.kind == ClassKind::O2) return false;
      if (l.kind == ClassKind::Tetra)
        return k.kind == ClassKind::Octa || k.kind == ClassKind::Icosa;
      return false;  // Octa, Icosa: only themselves and Full
  }
  return false;
}

bool is_cotoral(const GroupId& g, SubgroupClass l, SubgroupClass k) {
  require_valid_class(g, l);
  require_valid_class(g, k);
  if (l == k) return true;
  if (l.kind != ClassKind::C) return false;
  switch (g.kind) {
    case GroupKind::Circle: return k.kind == ClassKind::Full;
    case GroupKind::O2:
    case GroupKind::SO3: return k.kind == ClassKind::SO2;
    case GroupKind::Finite: return false;
  }
  return false;
}

bool is_in_phi(const GroupId& g, SubgroupClass k) {
  require_valid_class(g, k);
  switch (g.kind) {
    case GroupKind::Finite: return true;
    case GroupKind::Circle: return k.kind == ClassKind::Full;
    case GroupKind::O2: return k.kind != ClassKind::C;
    case GroupKind::SO3: return k.kind != ClassKind::C;
  }
  return false;
}

namespace {

GroupId subgroup_model(const GroupId& g, Mask sub, const std::string& label) {
  const auto& fg = *g.finite;
  std::vector<int> elems;
  for (int a = 0; a < fg.n; ++a)
    if (sub >> a & 1) elems.push_back(a);
  std::vector<int> pos(fg.n, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = pos[fg.mul(elems[i], elems[j])];
  return {GroupKind::Finite, make_finite_group(t, label)};
}

Mask lift_mask(const FiniteGroupData& ambient, Mask sub, Mask model_mask) {
  std::vector<int> elems;
  for (int a = 0; a < ambient.n; ++a)
    if (sub >> a & 1) elems.push_back(a);
  Mask out = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (model_mask >> i & 1) out |= Mask(1) << elems[i];
  return out;
}

}  // namespace

RestrictResult restrict_class(const GroupId& g, SubgroupClass h, SubgroupClass k) {
  require_valid_class(g, h);
  require_valid_class(g, k);
  if (!is_subconjugate(g, k, h))
    fail(Errc::NotSubconjugate, class_name(k) + " is not subconjugate to " + class_name(h));

  if (g.kind == GroupKind::Finite) {
    const auto& fg = *g.finite;
    Mask hrep = fg.classes[h.n].rep;
    GroupId model = subgroup_model(g, hrep, group_name(g) + "/" + class_name(h));
    std::vector<int> elems;
    for (int a = 0; a < fg.n; ++a)
      if (hrep >> a & 1) elems.push_back(a);
    std::vector<int> pos(fg.n, -1);
    for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    std::set<int> found;
    for (Mask m : fg.classes[k.n].orbit) {
      if ((m & hrep) != m) continue;
      Mask mm = 0;
      for (int a = 0; a < fg.n; ++a)
        if (m >> a & 1) mm |= Mask(1) << pos[a];
      found.insert(model.finite->class_of(mm));
    }
    RestrictResult out{model, {}};
    for (int i : found) out.parts.push_back(class_finite(i));
    return out;
  }

  if (g.kind == GroupKind::SO3 && h.kind == ClassKind::O2) {
    RestrictResult out{o2_group(), {}};
    switch (k.kind) {
      case ClassKind::C:
        if (k.n == 2)
          out.parts = {class_C(2), class_D(1)};  // half turns: the rotation and the reflection class
        else
          out.parts = {class_C(k.n)};
        break;
      case ClassKind::D: out.parts = {class_D(k.n)}; break;
      case ClassKind::SO2: out.parts = {class_SO2()}; break;
      case ClassKind::O2: out.parts = {class_full()}; break;
      default: fail(Errc::NotSubconjugate, class_name(k) + " is not subconjugate to O2");
    }
    return out;
  }

  if (g.kind == GroupKind::O2 && h.kind == ClassKind::SO2) {
    RestrictResult out{circle_group(), {}};
    if (k.kind == ClassKind::C)
      out.parts = {class_C(k.n)};
    else if (k.kind == ClassKind::SO2)
      out.parts = {class_full()};
    else
      fail(Errc::NotSubconjugate, class_name(k) + " is not subconjugate to SO2");
    return out;
  }

  fail(Errc::UnsupportedPair,
       "restriction supported for (SO3, O2), (O2, SO2) and finite groups; got (" + group_name(g) +
           ", " + class_name(h) + ")");
}

SubgroupClass ClassModel::fuse(SubgroupClass model_class) const {
  require_valid_class(model, model_class);
  if (model.kind == GroupKind::Finite) return table_fusion[model_class.n];
  if (model == ambient) return model_class;  // K is the whole group
  if (model.kind == GroupKind::Circle) {
    // K = SO2 inside O2 or SO3
    if (model_class.kind == ClassKind::Full) return class_SO2();
    return model_class;  // C(m)
  }
  // model O2 inside SO3
  switch (model_class.kind) {
    case ClassKind::C: return model_class;
    case ClassKind::D: return model_class.n == 1 ? class_C(2) : model_class;
    case ClassKind::SO2: return class_SO2();
    case ClassKind::Full: return class_O2();
    default: fail(Errc::InvalidClass, "unexpected O2 model class");
  }
}

namespace {

int max_element_order_in(const FiniteGroupData& g, Mask s) {
  int best = 1;
  for (int a = 0; a < g.n; ++a) {
    if (!(s >> a & 1)) continue;
    int ord = 1, x = a;
    while (x != 0) {
      x = g.mul(x, a);
      ++ord;
    }
    best = std::max(best, ord);
  }
  return best;
}

// Fusion of a subgroup of the tetra/octa/icosa models into SO(3) classes:
// finite subgroups of SO(3) are determined up to conjugacy by isomorphism
// type, which at these orders is readable from order and cyclicity.
SubgroupClass polyhedral_fusion(const FiniteGroupData& g, Mask s) {
  int o = std::popcount(s);
  if (o == 1) return class_C(1);
  bool cyclic = max_element_order_in(g, s) == o;
  if (cyclic) return class_C(o);
  switch (o) {
    case 4: return class_D(2);
    case 6: return class_D(3);
    case 8: return class_D(4);
    case 10: return class_D(5);
    case 12: return class_tetra();
    case 24: return class_octa();
    case 60: return class_icosa();
    default: fail(Errc::InvalidClass, "unrecognized polyhedral subgroup of order " + std::to_string(o));
  }
}

SubgroupClass dihedral_fusion(const GroupId& ambient, const FiniteGroupData& model, Mask s) {
  int nrot = model.n / 2;
  int rotations = 0;
  for (int a = 0; a < nrot; ++a)
    if (s >> a & 1) ++rotations;
  int o = std::popcount(s);
  if (o == rotations) return class_C(rotations);
  // contains a reflection of the model; in SO(3) the "reflections" are half
  // turns, so the order-2 case fuses into the rotation class C2
  if (ambient.kind == GroupKind::SO3 && rotations == 1) return class_C(2);
  return class_D(rotations);
}

}  // namespace

ClassModel model_of_class(const GroupId& g, SubgroupClass k) {
  require_valid_class(g, k);
  ClassModel m;
  m.ambient = g;
  m.k = k;
  if (k.kind == ClassKind::Full) {
    m.model = g;
    if (g.kind == GroupKind::Finite) {
      int top = g.finite->class_of_whole_group();
      m.top = class_finite(top);
      for (std::size_t i = 0; i < g.finite->classes.size(); ++i) m.table_fusion.push_back(class_finite(static_cast<int>(i)));
    } else {
      m.top = class_full();
    }
    return m;
  }
  if (g.kind == GroupKind::Finite) {
    const auto& fg = *g.finite;
    Mask rep = fg.classes[k.n].rep;
    m.model = subgroup_model(g, rep, group_name(g) + "/" + class_name(k));
    m.top = class_finite(m.model.finite->class_of_whole_group());
    for (const auto& cls : m.model.finite->classes) {
      Mask lifted = lift_mask(fg, rep, cls.rep);
      m.table_fusion.push_back(class_finite(fg.class_of(lifted)));
    }
    return m;
  }
  switch (k.kind) {
    case ClassKind::SO2:
      m.model = circle_group();
      m.top = class_full();
      return m;
    case ClassKind::O2:
      m.model = o2_group();
      m.top = class_full();
      return m;
    case ClassKind::C: {
      if (k.n > 64) fail(Errc::TooLarge, "cannot materialize cyclic model of order " + std::to_string(k.n));
      m.model = {GroupKind::Finite, make_finite_group(tables::cyclic(k.n), "C" + std::to_string(k.n))};
      m.top = class_finite(m.model.finite->class_of_whole_group());
      for (const auto& cls : m.model.finite->classes) m.table_fusion.push_back(class_C(cls.order));
      return m;
    }
    case ClassKind::D: {
      if (2 * k.n > 64) fail(Errc::TooLarge, "cannot materialize dihedral model of order " + std::to_string(2 * k.n));
      m.model = {GroupKind::Finite, make_finite_group(tables::dihedral(k.n), "D" + std::to_string(k.n))};
      m.top = class_finite(m.model.finite->class_of_whole_group());
      for (const auto& cls : m.model.finite->classes)
        m.table_fusion.push_back(dihedral_fusion(g, *m.model.finite, cls.rep));
      return m;
    }
    case ClassKind::Tetra:
    case ClassKind::Octa:
    case ClassKind::Icosa: {
      std::vector<std::vector<int>> t;
      std::string nm;
      if (k.kind == ClassKind::Tetra) {
        t = tables::alternating(4);
        nm = "A4";
      } else if (k.kind == ClassKind::Octa) {
        t = tables::symmetric(4);
        nm = "S4";
      } else {
        t = tables::alternating(5);
        nm = "A5";
      }
      m.model = {GroupKind::Finite, make_finite_group(t, nm)};
      m.top = class_finite(m.model.finite->class_of_whole_group());
      for (const auto& cls : m.model.finite->classes)
        m.table_fusion.push_back(polyhedral_fusion(*m.model.finite, cls.rep));
      return m;
    }
    default: fail(Errc::InvalidClass, "no model for class " + class_name(k));
  }
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidClass: return "InvalidClass";
    case Errc::UnsupportedPair: return "UnsupportedPair";
    case Errc::NotSubconjugate: return "NotSubconjugate";
    case Errc::UnsupportedInstance: return "UnsupportedInstance";
    case Errc::SpaceMismatch: return "SpaceMismatch";
    case Errc::MalformedDescriptor: return "MalformedDescriptor";
    case Errc::MalformedExpr: return "MalformedExpr";
    case Errc::NotFinite: return "NotFinite";
    case Errc::NotRealizable: return "NotRealizable";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotUnrelated: return "NotUnrelated";
    case Errc::ClassNotInGroup: return "ClassNotInGroup";
    case Errc::SplitUnavailable: return "SplitUnavailable";
    case Errc::MixedParity: return "MixedParity";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace ttg
