#include "ttg/finite_group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace ttg {

Mask FiniteGroupData::closure(Mask seed) const {
  Mask cur = seed | 1;  // identity
  while (true) {
    Mask next = cur;
    for (int a = 0; a < n; ++a) {
      if (!(cur >> a & 1)) continue;
      for (int b = 0; b < n; ++b) {
        if (!(cur >> b & 1)) continue;
        next |= Mask(1) << mul(a, b);
      }
    }
    if (next == cur) return cur;
    cur = next;
  }
}

Mask FiniteGroupData::conjugate(Mask s, int g) const {
  Mask out = 0;
  int gi = inv[g];
  for (int a = 0; a < n; ++a)
    if (s >> a & 1) out |= Mask(1) << mul(mul(g, a), gi);
  return out;
}

int FiniteGroupData::class_of(Mask s) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].order != std::popcount(s)) continue;
    if (std::binary_search(classes[i].orbit.begin(), classes[i].orbit.end(), s)) return static_cast<int>(i);
  }
  fail(Errc::InvalidClass, "subgroup mask not found in class list");
}

std::shared_ptr<const FiniteGroupData> make_finite_group(const std::vector<std::vector<int>>& table,
                                                         std::string name) {
  auto g = std::make_shared<FiniteGroupData>();
  int n = static_cast<int>(table.size());
  if (n < 1) fail(Errc::NotAGroup, "empty multiplication table");
  if (n > 64) fail(Errc::TooLarge, "group order " + std::to_string(n) + " exceeds 64");
  g->n = n;
  g->name = std::move(name);
  g->table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) fail(Errc::NotAGroup, "table is not square");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) fail(Errc::NotAGroup, "table entry out of range");
      g->table[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  for (int i = 0; i < n; ++i)
    if (g->mul(0, i) != i || g->mul(i, 0) != i) fail(Errc::NotAGroup, "element 0 is not an identity");
  g->inv.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (g->mul(i, j) == 0 && g->mul(j, i) == 0) {
        g->inv[i] = j;
        break;
      }
    if (g->inv[i] < 0) fail(Errc::NotAGroup, "element " + std::to_string(i) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
          fail(Errc::NotAGroup, "associativity fails");

  // All subgroups: close cyclic subgroups, then extend each known subgroup by
  // one outside element until nothing new appears.
  std::set<Mask> subs;
  subs.insert(1);
  std::vector<Mask> work;
  for (int a = 1; a < n; ++a) {
    Mask s = g->closure(Mask(1) << a);
    if (subs.insert(s).second) work.push_back(s);
  }
  while (!work.empty()) {
    Mask s = work.back();
    work.pop_back();
    for (int a = 1; a < n; ++a) {
      if (s >> a & 1) continue;
      Mask t = g->closure(s | Mask(1) << a);
      if (subs.insert(t).second) work.push_back(t);
    }
  }

  std::set<Mask> seen;
  for (Mask s : subs) {
    if (seen.count(s)) continue;
    SubgroupClassInfo info;
    std::set<Mask> orbit;
    for (int a = 0; a < n; ++a) orbit.insert(g->conjugate(s, a));
    info.orbit.assign(orbit.begin(), orbit.end());
    info.rep = info.orbit.front();
    info.order = std::popcount(s);
    info.class_size = static_cast<int>(info.orbit.size());
    int nn = 0;
    for (int a = 0; a < n; ++a)
      if (g->conjugate(info.rep, a) == info.rep) ++nn;
    info.normalizer_order = nn;
    for (Mask m : info.orbit) seen.insert(m);
    g->classes.push_back(std::move(info));
  }
  std::sort(g->classes.begin(), g->classes.end(), [](const SubgroupClassInfo& a, const SubgroupClassInfo& b) {
    return a.order != b.order ? a.order < b.order : a.rep < b.rep;
  });
  return g;
}

namespace tables {

std::vector<std::vector<int>> cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

std::vector<std::vector<int>> dihedral(int n) {
  // elements: r^i (0..n-1), s r^i (n..2n-1) with s r^i s = r^-i
  int m = 2 * n;
  auto enc = [n](bool flip, int rot) { return (flip ? n : 0) + ((rot % n + n) % n); };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool fi = i >= n, fj = j >= n;
      int ri = i % n, rj = j % n;
      // (s^fi r^ri)(s^fj r^rj) = s^(fi+fj) r^(rj +- ri)
      int rot = fj ? rj - ri : rj + ri;
      t[i][j] = enc(fi != fj, rot);
    }
  return t;
}

namespace {
std::vector<std::vector<int>> perm_group(const std::vector<std::vector<int>>& elems) {
  int n = static_cast<int>(elems.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[elems[i]] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(elems[i].size());
      for (std::size_t x = 0; x < comp.size(); ++x) comp[x] = elems[i][elems[j][x]];
      t[i][j] = index.at(comp);
    }
  return t;
}

std::vector<std::vector<int>> perms_of(int k, bool even_only) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if (p[a] > p[b]) ++inversions;
      if (inversions % 2) continue;
    }
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // identity must be element 0; std::next_permutation starts sorted, so it is.
  return out;
}
}  // namespace

std::vector<std::vector<int>> symmetric(int k) {
  if (k < 1 || k > 4) fail(Errc::TooLarge, "symmetric(k) supported for k <= 4");
  return perm_group(perms_of(k, false));
}

std::vector<std::vector<int>> alternating(int k) {
  if (k < 1 || k > 5) fail(Errc::TooLarge, "alternating(k) supported for k <= 5");
  return perm_group(perms_of(k, true));
}

std::string to_file_format(const std::vector<std::vector<int>>& table) {
  std::ostringstream os;
  os << table.size() << "\n";
  for (const auto& row : table) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  return os.str();
}

std::vector<std::vector<int>> from_file_format(const std::string& text) {
  std::istringstream is(text);
  long long n = 0;
  if (!(is >> n) || n < 1) fail(Errc::NotAGroup, "bad table header");
  if (n > 64) fail(Errc::TooLarge, "group order " + std::to_string(n) + " exceeds 64");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& row : t)
    for (auto& x : row)
      if (!(is >> x)) fail(Errc::NotAGroup, "truncated multiplication table");
  return t;
}

}  // namespace tables
}  // namespace ttg
