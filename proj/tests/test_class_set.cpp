#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bitset>
#include <random>

#include "ttg/class_set.hpp"

using namespace ttg;

namespace {

// Truncated model of a descriptor: membership bits for series indices 1..64
// plus the symbolic tail flag per series.
struct BitModel {
  std::bitset<65> c, d;
  bool c_tail = false, d_tail = false;
  std::set<SubgroupClass> specials;
  bool operator==(const BitModel&) const = default;
};

BitModel to_model(const ClassSet& s) {
  BitModel m;
  for (int n = 1; n <= 64; ++n) {
    if (has_series(s.group, ClassKind::C) && n >= series_start(s.group, ClassKind::C))
      m.c[n] = s.c.contains(n);
    if (has_series(s.group, ClassKind::D) && n >= series_start(s.group, ClassKind::D))
      m.d[n] = s.d.contains(n);
  }
  m.c_tail = s.c.cofinite;
  m.d_tail = s.d.cofinite;
  m.specials = s.specials;
  return m;
}

ClassSet random_set(std::mt19937& rng, const GroupId& g) {
  std::uniform_int_distribution<int> coin(0, 1), idx(1, 12), count(0, 4);
  ClassSet s = ClassSet::empty(g);
  if (has_series(g, ClassKind::C)) {
    s.c.cofinite = coin(rng);
    for (int i = count(rng); i > 0; --i) {
      int n = idx(rng);
      if (n >= series_start(g, ClassKind::C)) s.c.idx.insert(n);
    }
  }
  if (has_series(g, ClassKind::D)) {
    s.d.cofinite = coin(rng);
    for (int i = count(rng); i > 0; --i) {
      int n = idx(rng);
      if (n >= series_start(g, ClassKind::D)) s.d.idx.insert(n);
    }
  }
  for (SubgroupClass k : special_classes(g))
    if (coin(rng)) s.specials.insert(k);
  return s;
}

}  // namespace

TEST_CASE("Boolean algebra laws against the truncated bitset model") {
  std::mt19937 rng(2024);
  for (const GroupId& g : {circle_group(), o2_group(), so3_group()}) {
    for (int trial = 0; trial < 200; ++trial) {
      ClassSet a = random_set(rng, g), b = random_set(rng, g), c = random_set(rng, g);
      BitModel ma = to_model(a), mb = to_model(b);

      BitModel mu = to_model(set_union(a, b));
      CHECK(mu.c == (ma.c | mb.c));
      CHECK(mu.d == (ma.d | mb.d));
      CHECK(mu.c_tail == (ma.c_tail || mb.c_tail));
      CHECK(mu.d_tail == (ma.d_tail || mb.d_tail));

      BitModel mi = to_model(set_intersect(a, b));
      CHECK(mi.c == (ma.c & mb.c));
      CHECK(mi.d == (ma.d & mb.d));
      CHECK(mi.c_tail == (ma.c_tail && mb.c_tail));

      // complement within the valid index range
      BitModel mc = to_model(set_complement(a));
      for (int n = series_start(g, ClassKind::C); n <= 64 && has_series(g, ClassKind::C); ++n)
        CHECK(mc.c[static_cast<std::size_t>(n)] == !ma.c[static_cast<std::size_t>(n)]);
      CHECK(mc.c_tail == !ma.c_tail);

      // algebraic identities
      CHECK(set_union(a, set_complement(a)) == ClassSet::all(g));
      CHECK(set_intersect(a, set_complement(a)) == ClassSet::empty(g));
      CHECK(set_union(a, set_intersect(a, b)) == a);
      CHECK(set_intersect(set_union(a, b), set_union(a, c)) ==
            set_union(a, set_intersect(b, c)));
      CHECK(set_subset(set_intersect(a, b), a));
      CHECK(set_subset(a, set_union(a, b)));
      CHECK(set_subset(a, b) == (set_union(a, b) == b));
      CHECK(set_difference(a, b) == set_intersect(a, set_complement(b)));
    }
  }
}

TEST_CASE("membership and enumeration") {
  GroupId o2 = o2_group();
  ClassSet s = ClassSet::empty(o2);
  s.d = {true, {1, 3}};  // all D(n) except D1, D3
  s.insert(class_SO2());
  CHECK(s.contains(class_D(2)));
  CHECK(!s.contains(class_D(3)));
  CHECK(s.contains(class_D(64)));
  CHECK(s.contains(class_SO2()));
  CHECK(!s.contains(class_full()));
  CHECK(!s.contains(class_C(1)));
  auto m = s.members_up_to(4);
  REQUIRE(m.size() == 3);
  CHECK(class_name(m[0]) == "D2");
  CHECK(class_name(m[1]) == "D4");
  CHECK(class_name(m[2]) == "SO2");
  CHECK(!s.is_empty());
  CHECK(!s.is_finite());
}

TEST_CASE("insert against a cofinite part removes exceptions") {
  ClassSet s = ClassSet::empty(circle_group());
  s.c = {true, {2, 3}};
  s.insert(class_C(2));
  CHECK(s.c.idx == std::set<int>{3});
  CHECK(s.contains(class_C(2)));
}

TEST_CASE("group mismatch is rejected") {
  ClassSet a = ClassSet::empty(circle_group());
  ClassSet b = ClassSet::empty(o2_group());
  CHECK_THROWS_AS(set_union(a, b), Error);
}
