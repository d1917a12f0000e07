#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ttg/errors.hpp"

namespace ttg {

// Subgroups of a finite group are element-subset bitmasks over at most 64
// elements; the public loading path caps the order at 48.
using Mask = std::uint64_t;

struct SubgroupClassInfo {
  Mask rep = 1;                // canonical representative (smallest mask in orbit)
  std::vector<Mask> orbit;     // all conjugate subgroups, sorted
  int order = 1;               // |S|
  int normalizer_order = 1;    // |N_G(S)|
  int class_size = 1;          // [G : N_G(S)]
};

struct FiniteGroupData {
  int n = 1;
  std::string name;
  std::vector<int> table;      // row-major n*n, table[i*n+j] = i*j
  std::vector<int> inv;
  std::vector<SubgroupClassInfo> classes;  // sorted by (order, rep)

  int mul(int i, int j) const { return table[static_cast<std::size_t>(i) * n + j]; }
  Mask closure(Mask seed) const;
  Mask conjugate(Mask s, int g) const;
  // index into classes of the conjugacy class of subgroup mask s
  int class_of(Mask s) const;
  int class_of_whole_group() const { return class_of((n == 64) ? ~Mask(0) : ((Mask(1) << n) - 1)); }
};

// Validates the table as a group (identity 0, inverses, associativity) and
// enumerates all subgroups up to conjugacy by brute force. Internal entry
// point, accepts orders up to 64.
std::shared_ptr<const FiniteGroupData> make_finite_group(const std::vector<std::vector<int>>& table,
                                                         std::string name);

namespace tables {
std::vector<std::vector<int>> cyclic(int n);
std::vector<std::vector<int>> dihedral(int n);     // order 2n: 0..n-1 rotations, n..2n-1 reflections
std::vector<std::vector<int>> symmetric(int k);    // k <= 4
std::vector<std::vector<int>> alternating(int k);  // k <= 5
std::string to_file_format(const std::vector<std::vector<int>>& table);
std::vector<std::vector<int>> from_file_format(const std::string& text);
}  // namespace tables

}  // namespace ttg
