#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ttg/group_catalog.hpp"
#include "ttg/phi_space.hpp"

using namespace ttg;

namespace {

std::vector<std::string> names(const std::vector<SubgroupClass>& ks) {
  std::vector<std::string> out;
  for (auto k : ks) out.push_back(class_name(k));
  return out;
}

}  // namespace

TEST_CASE("class listings") {
  CHECK(names(classes(circle_group(), 3)) == std::vector<std::string>{"C1", "C2", "C3", "G"});
  CHECK(names(classes(o2_group(), 2)) ==
        std::vector<std::string>{"C1", "C2", "D1", "D2", "SO2", "G"});
  CHECK(names(classes(so3_group(), 2)) ==
        std::vector<std::string>{"C1", "C2", "D2", "SO2", "O2", "A4", "S4", "A5", "G"});
}

TEST_CASE("class validity follows the catalogue") {
  CHECK(!valid_class(circle_group(), class_D(2)));
  CHECK(!valid_class(so3_group(), class_D(1)));  // an order-2 subgroup of SO3 is C2
  CHECK(valid_class(o2_group(), class_D(1)));
  CHECK(!valid_class(o2_group(), class_tetra()));
  CHECK_THROWS_AS(require_valid_class(circle_group(), class_SO2()), Error);
}

TEST_CASE("subconjugacy examples") {
  GroupId o2 = o2_group();
  CHECK(is_subconjugate(o2, class_C(2), class_D(4)));
  CHECK(!is_subconjugate(o2, class_D(2), class_SO2()));
  CHECK(is_subconjugate(o2, class_D(3), class_D(3)));
  CHECK(!is_subconjugate(o2, class_C(3), class_D(4)));
  CHECK(is_subconjugate(o2, class_D(1), class_D(5)));

  GroupId so3 = so3_group();
  CHECK(is_subconjugate(so3, class_C(2), class_D(3)));   // half turn inside D3
  CHECK(is_subconjugate(so3, class_D(3), class_icosa()));
  CHECK(!is_subconjugate(so3, class_octa(), class_icosa()));
  CHECK(is_subconjugate(so3, class_tetra(), class_octa()));
  CHECK(is_subconjugate(so3, class_C(5), class_icosa()));
  CHECK(!is_subconjugate(so3, class_C(5), class_octa()));
  CHECK(is_subconjugate(so3, class_SO2(), class_O2()));
  CHECK(!is_subconjugate(so3, class_O2(), class_icosa()));
}

TEST_CASE("cotoral examples") {
  CHECK(is_cotoral(o2_group(), class_C(5), class_SO2()));
  CHECK(!is_cotoral(o2_group(), class_D(3), class_full()));
  CHECK(!is_cotoral(so3_group(), class_SO2(), class_full()));
  CHECK(is_cotoral(circle_group(), class_C(7), class_full()));
  CHECK(!is_cotoral(o2_group(), class_C(3), class_full()));
  CHECK(!is_cotoral(so3_group(), class_C(2), class_O2()));
}

TEST_CASE("order axioms hold exhaustively on truncated class lists") {
  std::vector<GroupId> groups = {circle_group(), o2_group(), so3_group(),
                                 load_finite_group(tables::symmetric(4), "S4")};
  for (const GroupId& g : groups) {
    CAPTURE(group_name(g));
    auto ks = classes(g, 12);
    for (auto a : ks) {
      CHECK(is_subconjugate(g, a, a));
      CHECK(is_cotoral(g, a, a));
      for (auto b : ks) {
        if (is_cotoral(g, a, b)) CHECK(is_subconjugate(g, a, b));
        if (g.kind == GroupKind::Finite && is_cotoral(g, a, b)) CHECK(a == b);
        if (a != b && is_subconjugate(g, a, b)) CHECK(!is_subconjugate(g, b, a));
        if (a != b && is_cotoral(g, a, b)) CHECK(!is_cotoral(g, b, a));
        for (auto c : ks) {
          if (is_subconjugate(g, a, b) && is_subconjugate(g, b, c))
            CHECK(is_subconjugate(g, a, c));
          if (is_cotoral(g, a, b) && is_cotoral(g, b, c)) CHECK(is_cotoral(g, a, c));
        }
      }
    }
  }
}

TEST_CASE("finite Weyl classes") {
  CHECK(!is_in_phi(circle_group(), class_C(7)));
  CHECK(is_in_phi(circle_group(), class_full()));
  CHECK(is_in_phi(o2_group(), class_D(3)));
  CHECK(is_in_phi(o2_group(), class_SO2()));
  CHECK(!is_in_phi(o2_group(), class_C(4)));
  CHECK(is_in_phi(so3_group(), class_tetra()));
  CHECK(is_in_phi(so3_group(), class_SO2()));  // W = O2/SO2 = Z/2
  CHECK(!is_in_phi(so3_group(), class_C(2)));
}

TEST_CASE("finite Weyl group iff cotorally maximal") {
  for (const GroupId& g : {circle_group(), o2_group(), so3_group()}) {
    auto ks = classes(g, 12);
    for (auto k : ks) {
      bool maximal = true;
      for (auto h : ks)
        if (h != k && is_cotoral(g, k, h)) maximal = false;
      CHECK(is_in_phi(g, k) == maximal);
    }
  }
}

TEST_CASE("hard-coded tables agree with the finite-model fusion oracle") {
  // For each concrete model of a class K, the classes subconjugate to the
  // fused image of a model class b are exactly the fused images of the model
  // classes under b.
  auto check_model = [](const GroupId& g, SubgroupClass k, int bound) {
    ClassModel m = model_of_class(g, k);
    REQUIRE(m.model.kind == GroupKind::Finite);
    const auto& classes_in_model = m.model.finite->classes;
    for (int b = 0; b < static_cast<int>(classes_in_model.size()); ++b) {
      std::set<SubgroupClass> fused_below;
      for (int a = 0; a < static_cast<int>(classes_in_model.size()); ++a)
        if (is_subconjugate(m.model, class_finite(a), class_finite(b)))
          fused_below.insert(m.fuse(class_finite(a)));
      SubgroupClass kb = m.fuse(class_finite(b));
      for (auto x : classes(g, bound)) {
        INFO(class_name(k) << " model, " << class_name(x) << " <= " << class_name(kb));
        bool in_table = is_subconjugate(g, x, kb);
        bool in_model = fused_below.count(x) > 0;
        CHECK(in_table == in_model);
      }
    }
  };
  for (int n = 1; n <= 12; ++n) check_model(o2_group(), class_D(n), 26);
  for (int n = 2; n <= 12; ++n) check_model(so3_group(), class_D(n), 26);
  for (int n = 1; n <= 12; ++n) check_model(so3_group(), class_C(n), 26);
  check_model(so3_group(), class_tetra(), 8);
  check_model(so3_group(), class_octa(), 10);
  check_model(so3_group(), class_icosa(), 12);
}

TEST_CASE("restriction to O(2) splits the half turns") {
  RestrictResult r = restrict_class(so3_group(), class_O2(), class_C(2));
  CHECK(r.model.kind == GroupKind::O2);
  CHECK(names(r.parts) == std::vector<std::string>{"C2", "D1"});

  r = restrict_class(so3_group(), class_O2(), class_C(5));
  CHECK(names(r.parts) == std::vector<std::string>{"C5"});
  r = restrict_class(so3_group(), class_O2(), class_D(4));
  CHECK(names(r.parts) == std::vector<std::string>{"D4"});
}

TEST_CASE("restriction to SO(2) is a single class") {
  for (int n : {1, 2, 5}) {
    RestrictResult r = restrict_class(o2_group(), class_SO2(), class_C(n));
    CHECK(r.model.kind == GroupKind::Circle);
    CHECK(names(r.parts) == std::vector<std::string>{"C" + std::to_string(n)});
  }
  RestrictResult r = restrict_class(o2_group(), class_SO2(), class_SO2());
  CHECK(names(r.parts) == std::vector<std::string>{"G"});
}

TEST_CASE("restriction errors") {
  CHECK_THROWS_AS(restrict_class(so3_group(), class_O2(), class_tetra()), Error);
  try {
    restrict_class(circle_group(), class_C(4), class_C(2));
  } catch (const Error& e) {
    CHECK(e.code == Errc::UnsupportedPair);
  }
}

TEST_CASE("restriction inside S4: double transpositions under D4") {
  GroupId s4 = load_finite_group(tables::symmetric(4), "S4");
  const auto& fg = *s4.finite;
  // identify the D4 class (order 8) and the two order-2 classes
  int d4 = -1;
  std::vector<int> order2;
  for (int i = 0; i < static_cast<int>(fg.classes.size()); ++i) {
    if (fg.classes[i].order == 8) d4 = i;
    if (fg.classes[i].order == 2) order2.push_back(i);
  }
  REQUIRE(d4 >= 0);
  REQUIRE(order2.size() == 2);
  // the double transpositions form the class of size 3 (transpositions: 6)
  int dbl = fg.classes[order2[0]].class_size == 3 ? order2[0] : order2[1];
  int tr = fg.classes[order2[0]].class_size == 3 ? order2[1] : order2[0];
  CHECK(fg.classes[dbl].class_size == 3);
  CHECK(fg.classes[tr].class_size == 6);

  // double transpositions fall into a central and a non-central D4 class
  RestrictResult r = restrict_class(s4, class_finite(d4), class_finite(dbl));
  REQUIRE(r.parts.size() == 2);
  std::multiset<int> sizes;
  for (auto p : r.parts) sizes.insert(r.model.finite->classes[p.n].class_size);
  CHECK(sizes == std::multiset<int>{1, 2});

  // transpositions form a single D4 class
  r = restrict_class(s4, class_finite(d4), class_finite(tr));
  CHECK(r.parts.size() == 1);

  // the union of the member sets matches the brute-force intersection
  RestrictResult rd = restrict_class(s4, class_finite(d4), class_finite(dbl));
  Mask hrep = fg.classes[d4].rep;
  std::set<Mask> expected;
  for (Mask m : fg.classes[dbl].orbit)
    if ((m & hrep) == m) expected.insert(m);
  std::set<Mask> got;
  std::vector<int> elems;
  for (int a = 0; a < fg.n; ++a)
    if (hrep >> a & 1) elems.push_back(a);
  for (auto p : rd.parts)
    for (Mask mm : rd.model.finite->classes[p.n].orbit) {
      Mask lifted = 0;
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (mm >> i & 1) lifted |= Mask(1) << elems[i];
      got.insert(lifted);
    }
  CHECK(got == expected);
}

TEST_CASE("separating clopen sets") {
  SeparatingClopen s = separating_clopen(so3_group(), class_C(2));
  CHECK(s.normalizer_model.kind == GroupKind::O2);
  CHECK(s.u.set == ClassSet::of(o2_group(), {class_SO2()}));

  SeparatingClopen t = separating_clopen(so3_group(), class_tetra());
  REQUIRE(t.normalizer_model.kind == GroupKind::Finite);
  CHECK(t.normalizer_model.finite->n == 24);
  REQUIRE(t.u.set.specials.size() == 1);
  CHECK(t.normalizer_model.finite->classes[t.u.set.specials.begin()->n].order == 12);

  GroupId s4 = load_finite_group(tables::symmetric(4), "S4");
  for (int i = 0; i < static_cast<int>(s4.finite->classes.size()); ++i) {
    SeparatingClopen f = separating_clopen(s4, class_finite(i));
    CHECK(f.normalizer_model.finite->n == s4.finite->classes[i].normalizer_order);
    CHECK(f.u.set.specials.size() == 1);
  }

  CHECK_THROWS_AS(separating_clopen(o2_group(), class_D(3)), Error);
}

TEST_CASE("group file loading") {
  std::string path = "/tmp/ttg_test_z6.tbl";
  {
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f);
    std::string text = tables::to_file_format(tables::cyclic(6));
    fwrite(text.data(), 1, text.size(), f);
    fclose(f);
  }
  GroupId g = load_finite_group_file(path);
  CHECK(g.finite->classes.size() == 4);
}
