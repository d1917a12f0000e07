#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ttg/ratmat.hpp"

using namespace ttg;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-4, 4);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = entry(rng);
  return m;
}

// permutation-expansion determinant, independent of the elimination path
Rat det_oracle(const Matrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rat sum(0);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Rat term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

TEST_CASE("rref on a known matrix") {
  Matrix m{{2, 4, 0}, {1, 2, 1}};
  auto pivots = rref(m);
  CHECK(pivots == std::vector<std::size_t>{0, 2});
  CHECK(m.rows() == 2);
  CHECK(m[0][0] == 1);
  CHECK(m[0][1] == 2);
  CHECK(m[0][2] == 0);
  CHECK(m[1][2] == 1);
}

TEST_CASE("null space annihilates and has complementary rank") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rows = 1 + trial % 4, cols = 2 + trial % 5;
    Matrix m = random_matrix(rng, rows, cols);
    Matrix ker = null_space(m);
    CHECK(ker.rows() + rank(m) == cols);
    for (std::size_t k = 0; k < ker.rows(); ++k)
      for (std::size_t i = 0; i < rows; ++i) {
        Rat dot(0);
        for (std::size_t j = 0; j < cols; ++j) dot += m[i][j] * ker[k][j];
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("intersection and sum satisfy the dimension formula") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t cols = 3 + trial % 3;
    Matrix a = random_matrix(rng, 1 + trial % 3, cols);
    Matrix b = random_matrix(rng, 1 + (trial + 1) % 3, cols);
    Matrix meet = row_space_intersect(a, b);
    Matrix join = row_space_sum(a, b);
    CHECK(meet.rows() + join.rows() == rank(a) + rank(b));
    CHECK(row_space_leq(meet, a));
    CHECK(row_space_leq(meet, b));
    CHECK(row_space_leq(a, join));
    for (std::size_t r = 0; r < meet.rows(); ++r) {
      CHECK(in_row_space(rref_copy(a), meet[r]));
      CHECK(in_row_space(rref_copy(b), meet[r]));
    }
  }
}

TEST_CASE("reduce_mod produces canonical coset representatives") {
  Matrix basis{{1, 0, 1}, {0, 1, 2}};
  rref(basis);
  RatVec v{Rat(3), Rat(5), Rat(0)};
  RatVec r = reduce_mod(basis, v);
  // subtracting 3*row0 + 5*row1 clears the pivots
  CHECK(r[0] == 0);
  CHECK(r[1] == 0);
  CHECK(r[2] == Rat(-13));
  RatVec again = reduce_mod(basis, r);
  CHECK(again == r);
  CHECK(in_row_space(basis, RatVec{Rat(2), Rat(-1), Rat(0)}));
}

TEST_CASE("canonical complement spans the quotient") {
  Matrix basis{{1, 2, 0, 3}};
  rref(basis);
  Matrix comp = canonical_complement(basis);
  CHECK(comp.rows() == 3);
  Matrix all = row_space_sum(basis, comp);
  CHECK(all.rows() == 4);
}

TEST_CASE("determinant matches permanent-style expansion") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 3;
    Matrix m = random_matrix(rng, n, n);
    CHECK(det(m) == det_oracle(m));
  }
}
