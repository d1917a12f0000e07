#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ttg/isotropy.hpp"
#include "ttg/parse.hpp"

using namespace ttg;

namespace {

ClassSet set_of(const GroupId& g, const std::string& text) { return parse_class_set(g, text); }

ExprPtr random_finite_expr(std::mt19937& rng, const GroupId& g, int depth) {
  std::uniform_int_distribution<int> node(0, 5), idx(1, 8), cut(1, 5);
  auto leaf_class = [&]() {
    auto ks = classes(g, 8);
    std::uniform_int_distribution<std::size_t> pick(0, ks.size() - 1);
    return ks[pick(rng)];
  };
  if (depth == 0) {
    switch (node(rng) % 3) {
      case 0: return expr::sphere0();
      case 1: return expr::cell(leaf_class());
      default: return expr::basic(leaf_class(), cut(rng));
    }
  }
  switch (node(rng)) {
    case 0: return expr::wedge(random_finite_expr(rng, g, depth - 1), random_finite_expr(rng, g, depth - 1));
    case 1: return expr::smash(random_finite_expr(rng, g, depth - 1), random_finite_expr(rng, g, depth - 1));
    case 2: return expr::susp(idx(rng), random_finite_expr(rng, g, depth - 1));
    case 3: return expr::dual(random_finite_expr(rng, g, depth - 1));
    default: return random_finite_expr(rng, g, 0);
  }
}

}  // namespace

TEST_CASE("support of leaves") {
  GroupId o2 = o2_group();
  // the unit has full support
  CHECK(support(o2, expr::sphere0()).set == ClassSet::all(o2));
  CHECK(support(circle_group(), expr::sphere0()).set == ClassSet::all(circle_group()));
  // zero has empty support
  CHECK(support(o2, expr::zero()).set.is_empty());
  // natural cells carry the subconjugacy down-set
  CHECK(support(o2, expr::cell(class_D(6))).set ==
        set_of(o2, "{C1,C2,C3,C6,D1,D2,D3,D6}"));
  CHECK(support(o2, expr::cell(class_SO2())).set == set_of(o2, "Lct{SO2}"));
  CHECK(support(o2, expr::cell(class_full())).set == ClassSet::all(o2));
  // single-class spectra
  CHECK(support(o2, expr::isoclass(class_SO2())).set == set_of(o2, "{SO2}"));
  CHECK(!support(o2, expr::isoclass(class_SO2())).cotorally_closed);
}

TEST_CASE("support of basic cells reproduces the dihedral tails") {
  GroupId o2 = o2_group();
  for (int n : {1, 2, 5}) {
    IsotropySet s = support(o2, expr::basic(class_full(), n));
    ClassSet expect = ClassSet::of(o2, {class_full()});
    expect.d.cofinite = true;
    for (int i = 1; i < n; ++i) expect.d.idx.insert(i);
    CHECK(s.set == expect);
    CHECK(s.cotorally_closed);
    CHECK(ctmax(s.set) == s.set);
  }
  // singleton basic cells
  CHECK(support(o2, expr::basic(class_D(5), 1)).set == set_of(o2, "{D5}"));
  CHECK(support(o2, expr::basic(class_SO2(), 1)).set == set_of(o2, "Lct{SO2}"));
  CHECK(support(o2, expr::basic(class_C(4), 1)).set == set_of(o2, "Lct{C4}"));
}

TEST_CASE("support of the O2 class inside SO3") {
  GroupId so3 = so3_group();
  IsotropySet s2 = support(so3, expr::basic(class_O2(), 2));
  ClassSet expect = ClassSet::of(so3, {class_O2()});
  expect.d.cofinite = true;
  CHECK(s2.set == expect);
  // cutoff 1 pulls in the reflection classes, which fuse to half turns
  IsotropySet s1 = support(so3, expr::basic(class_O2(), 1));
  expect.insert(class_C(2));
  CHECK(s1.set == expect);
}

TEST_CASE("smash and wedge compute intersections and unions") {
  GroupId so3 = so3_group();
  ExprPtr a = expr::basic(class_tetra(), 1);
  ExprPtr b = expr::basic(class_icosa(), 1);
  CHECK(support(so3, expr::smash(a, b)).set.is_empty());
  CHECK(support(so3, expr::wedge(a, b)).set == set_of(so3, "{A4,A5}"));
  // suspension and duality leave support alone
  CHECK(support(so3, expr::susp(3, a)).set == support(so3, a).set);
  CHECK(support(so3, expr::dual(a)).set == support(so3, a).set);
  // unrelated finite classes in a finite group smash to zero
  GroupId s4 = load_finite_group(tables::symmetric(4), "S4");
  ExprPtr x = expr::basic(class_finite(1), 1);
  ExprPtr y = expr::basic(class_finite(2), 1);
  CHECK(support(s4, expr::smash(x, y)).set.is_empty());
}

TEST_CASE("support algebra on random trees") {
  std::mt19937 rng(321);
  for (const GroupId& g : {circle_group(), o2_group(), so3_group()}) {
    for (int t = 0; t < 40; ++t) {
      ExprPtr a = random_finite_expr(rng, g, 2);
      ExprPtr b = random_finite_expr(rng, g, 2);
      ExprPtr c = random_finite_expr(rng, g, 1);
      ClassSet sa = support(g, a).set, sb = support(g, b).set, sc = support(g, c).set;
      CHECK(support(g, expr::smash(a, b)).set == set_intersect(sa, sb));
      CHECK(support(g, expr::wedge(a, b)).set == set_union(sa, sb));
      CHECK(support(g, expr::smash(a, expr::wedge(b, c))).set ==
            set_union(set_intersect(sa, sb), set_intersect(sa, sc)));
      CHECK(support(g, expr::smash(a, b)).set == support(g, expr::smash(b, a)).set);
      // every finite expression has realizable support that round-trips
      CHECK(is_realizable(sa));
      CHECK(support(g, realize(g, sa)).set == sa);
    }
  }
}

TEST_CASE("lambda_ct and ctmax") {
  GroupId o2 = o2_group();
  ClassSet so2 = set_of(o2, "{SO2}");
  ClassSet cone = lambda_ct(so2);
  CHECK(cone.c.cofinite);
  CHECK(cone.c.idx.empty());
  CHECK(cone.contains(class_C(1)));
  CHECK(cone == set_of(o2, "Lct{SO2}"));
  CHECK(lambda_ct(set_of(o2, "{D5}")) == set_of(o2, "{D5}"));
  GroupId s4 = load_finite_group(tables::symmetric(4), "S4");
  ClassSet fin = ClassSet::of(s4, {class_finite(3), class_finite(5)});
  CHECK(lambda_ct(fin) == fin);

  CHECK(ctmax(support(o2, expr::sphere0()).set) == set_of(o2, "{SO2,G}+tailD(1)"));
  CHECK(ctmax(set_of(o2, "{C2,SO2,C1}")) == set_of(o2, "{SO2}"));
  CHECK(ctmax(set_of(circle_group(), "Lct{G}")) == set_of(circle_group(), "{G}"));
}

TEST_CASE("realizability of circle descriptors") {
  GroupId t = circle_group();
  CHECK(is_realizable(set_of(t, "Lct{C2,C3}")));
  CHECK(is_realizable(set_of(t, "{C2,C3}")));  // already cotorally closed
  ClassSet allc = ClassSet::empty(t);
  allc.c = {true, {}};
  CHECK(!is_f_compact(ctmax(allc)));
  CHECK(!is_realizable(allc));
  CHECK(is_realizable(ClassSet::all(t)));
}

TEST_CASE("realizability over O2") {
  GroupId o2 = o2_group();
  CHECK(!is_realizable(set_of(o2, "{G}")));          // not f-open
  CHECK(is_realizable(set_of(o2, "{G}+tailD(3)")));  // the dihedral-tail shape
  CHECK(!is_realizable(set_of(o2, "{SO2}")));        // not cotorally closed
  CHECK(is_realizable(set_of(o2, "Lct{SO2}")));
  ClassSet alld = ClassSet::empty(o2);
  alld.d = {true, {}};
  CHECK(!is_realizable(alld));  // tail without its limit point
}

TEST_CASE("realize produces wedges of basic cells with exact support") {
  GroupId o2 = o2_group();
  for (const char* text : {"Lct{SO2}", "{G}+tailD(3)", "{D2,D5}", "Lct{C3}+{D4}",
                           "Lct{SO2}+{G}+tailD(1)", "{G}+tailD(2)+Lct{C2}"}) {
    ClassSet s = set_of(o2, text);
    REQUIRE(is_realizable(s));
    ExprPtr e = realize(o2, s);
    CHECK(support(o2, e).set == s);
  }
  CHECK(realize(o2, ClassSet::all(o2))->node == SpectrumExpr::Node::Sphere0);
  CHECK(realize(o2, ClassSet::empty(o2))->node == SpectrumExpr::Node::Zero);
  CHECK_THROWS_AS(realize(o2, set_of(o2, "{G}")), Error);

  GroupId so3 = so3_group();
  for (const char* text : {"{O2}+tailD(2)", "{O2,C2}+tailD(4)", "Lct{SO2}+{A4,A5}",
                           "{A4}", "Lct{SO2}+{O2}+tailD(2)"}) {
    ClassSet s = set_of(so3, text);
    REQUIRE(is_realizable(s));
    CHECK(support(so3, realize(so3, s)).set == s);
  }
}

TEST_CASE("prime containment is the cotoral order") {
  GroupId o2 = o2_group();
  CHECK(prime_leq({o2, class_C(3)}, {o2, class_SO2()}));
  CHECK(!prime_leq({o2, class_D(3)}, {o2, class_full()}));
  CHECK(prime_leq({o2, class_D(3)}, {o2, class_D(3)}));
  CHECK_THROWS_AS(prime_leq({o2, class_C(2)}, {circle_group(), class_C(2)}), Error);
  for (const GroupId& g : {circle_group(), o2_group(), so3_group()}) {
    for (auto a : classes(g, 12))
      for (auto b : classes(g, 12)) CHECK(prime_leq({g, a}, {g, b}) == is_cotoral(g, a, b));
  }
}

TEST_CASE("point closures") {
  GroupId o2 = o2_group();
  CHECK(point_closure(o2, class_SO2()).set == set_of(o2, "Lct{SO2}"));
  CHECK(point_closure(so3_group(), class_tetra()).set == set_of(so3_group(), "{A4}"));
  GroupId e = load_finite_group({{0}}, "1");
  CHECK(point_closure(e, class_finite(0)).set == ClassSet::of(e, {class_finite(0)}));
  // point closure agrees with the closure operator on singletons
  for (auto k : classes(o2, 6))
    CHECK(point_closure(o2, k).set == zariski_closure(ClassSet::of(o2, {k})));
}

TEST_CASE("thick tensor ideal membership") {
  GroupId o2 = o2_group();
  CHECK(in_thickt(o2, expr::cell(class_C(2)), expr::sphere0()));
  CHECK(!in_thickt(o2, expr::sphere0(), expr::basic(class_full(), 1)));
  ExprPtr x = expr::basic(class_D(4), 2);
  CHECK(in_thickt(o2, x, x));
  CHECK_THROWS_AS(in_thickt(o2, expr::isoclass(class_SO2()), expr::sphere0()), Error);
}

TEST_CASE("localizing comparison") {
  GroupId o2 = o2_group();
  // a clopen singleton whose cotoral cone is itself
  CHECK(loct_equal(o2, expr::isoclass(class_D(3)), expr::basic(class_D(3), 1)));
  CHECK(loct_equal(o2, expr::cell(class_full()), expr::sphere0()));
  CHECK(!loct_equal(o2, expr::isoclass(class_SO2()), expr::cell(class_SO2())));
}

TEST_CASE("thick membership tracks support inclusion on random pairs") {
  std::mt19937 rng(77);
  GroupId so3 = so3_group();
  for (int t = 0; t < 120; ++t) {
    ExprPtr y = random_finite_expr(rng, so3, 2);
    ExprPtr x = random_finite_expr(rng, so3, 2);
    CHECK(in_thickt(so3, y, x) == set_subset(support(so3, y).set, support(so3, x).set));
    CHECK(loct_equal(so3, y, x) == (support(so3, y).set == support(so3, x).set));
    CHECK(in_thickt(so3, y, expr::wedge(y, x)));
    CHECK(in_thickt(so3, expr::smash(y, x), x));
  }
}

TEST_CASE("separation by basic cells") {
  GroupId o2 = o2_group();
  auto [x1, x2] = separate(o2, class_SO2(), class_D(3));
  CHECK(support(o2, x1).set.contains(class_SO2()));
  CHECK(support(o2, x2).set.contains(class_D(3)));
  CHECK(set_intersect(support(o2, x1).set, support(o2, x2).set).is_empty());

  auto [t1, t2] = separate(so3_group(), class_tetra(), class_icosa());
  CHECK(set_intersect(support(so3_group(), t1).set, support(so3_group(), t2).set).is_empty());

  // the full O2 class can be separated from a dihedral class by shrinking
  auto [f1, f2] = separate(o2, class_full(), class_D(3));
  CHECK(support(o2, f1).set.contains(class_full()));
  CHECK(!support(o2, f1).set.contains(class_D(3)));
  CHECK(set_intersect(support(o2, f1).set, support(o2, f2).set).is_empty());

  // O2 inside SO3 against the half-turn class
  auto [g1, g2] = separate(so3_group(), class_O2(), class_C(2));
  CHECK(set_intersect(support(so3_group(), g1).set, support(so3_group(), g2).set).is_empty());

  CHECK_THROWS_AS(separate(o2, class_C(2), class_C(2)), Error);
  CHECK_THROWS_AS(separate(o2, class_SO2(), class_C(4)), Error);
}

TEST_CASE("zariski closed sets") {
  GroupId o2 = o2_group();
  CHECK(is_zariski_closed(set_of(o2, "Lct{C2}")));
  CHECK(is_zariski_closed(ClassSet::all(o2)));
  CHECK(is_zariski_closed(ClassSet::empty(o2)));
  // the support of any finite expression is closed
  std::mt19937 rng(31);
  for (int t = 0; t < 30; ++t) {
    ExprPtr e = random_finite_expr(rng, o2, 2);
    CHECK(is_zariski_closed(support(o2, e).set));
  }
  // a dihedral tail needs its limit
  ClassSet alld = ClassSet::empty(o2);
  alld.d = {true, {}};
  CHECK(!is_zariski_closed(alld));
  ClassSet closed = zariski_closure(alld);
  CHECK(closed.contains(class_full()));
  CHECK(closed.d.cofinite);
  // all cyclic classes force the circle
  ClassSet allc = ClassSet::empty(o2);
  allc.c = {true, {}};
  CHECK(!is_zariski_closed(allc));
  CHECK(zariski_closure(allc) == set_of(o2, "Lct{SO2}"));
  // a set that is not cotorally closed is not closed
  CHECK(!is_zariski_closed(set_of(o2, "{SO2}")));
}

TEST_CASE("zariski closure is a closure operator") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coin(0, 1), idx(1, 9), count(0, 3);
  for (const GroupId& g : {circle_group(), o2_group(), so3_group()}) {
    for (int t = 0; t < 100; ++t) {
      auto rand_set = [&]() {
        ClassSet s = ClassSet::empty(g);
        if (has_series(g, ClassKind::C)) {
          s.c.cofinite = coin(rng);
          for (int i = count(rng); i > 0; --i) s.c.idx.insert(idx(rng));
        }
        if (has_series(g, ClassKind::D)) {
          s.d.cofinite = coin(rng);
          for (int i = count(rng); i > 0; --i) {
            int n = idx(rng);
            if (n >= series_start(g, ClassKind::D)) s.d.idx.insert(n);
          }
        }
        for (auto k : special_classes(g))
          if (coin(rng)) s.specials.insert(k);
        return s;
      };
      ClassSet a = rand_set(), b = rand_set();
      ClassSet ca = zariski_closure(a);
      CHECK(set_subset(a, ca));          // extensive
      CHECK(zariski_closure(ca) == ca);  // idempotent
      CHECK(is_zariski_closed(ca));
      if (set_subset(a, b)) CHECK(set_subset(ca, zariski_closure(b)));  // monotone
    }
  }
}

TEST_CASE("expression parsing and printing") {
  GroupId o2 = o2_group();
  ExprPtr e = parse_expr(o2, "wedge(smash(basic(G, 3), cell(D4)), susp(-2, dual(S0)))");
  CHECK(expr_str(e) == "wedge(smash(basic(G, 3), cell(D4)), susp(-2, dual(S0)))");
  CHECK(parse_expr(o2, " iso( SO2 ) ")->node == SpectrumExpr::Node::IsoClass);
  CHECK(parse_expr(o2, "0")->node == SpectrumExpr::Node::Zero);
  CHECK_THROWS_AS(parse_expr(o2, "cell(Q8)"), Error);
  CHECK_THROWS_AS(parse_expr(o2, "wedge(S0)"), Error);
  CHECK_THROWS_AS(parse_expr(o2, "dual(iso(SO2))"), Error);
  // duality requires finite operands but is fine otherwise
  CHECK(expr_is_finite(parse_expr(o2, "dual(basic(D3, 1))")));
  CHECK(!expr_is_finite(parse_expr(o2, "wedge(S0, iso(C2))")));
}
