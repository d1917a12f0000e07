#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ttg/rational.hpp"

namespace ttg {

using RatVec = std::vector<Rat>;

// Dense matrix over Q with exact arithmetic. Rows are the primary axis; a
// matrix with zero rows still knows its column count so empty row spaces
// compose correctly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, RatVec(cols, Rat(0))) {}
  explicit Matrix(std::size_t cols) : cols_(cols) {}
  Matrix(std::initializer_list<std::initializer_list<int>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero_rows(std::size_t cols) { return Matrix(cols); }
  static Matrix from_rows(std::size_t cols, std::vector<RatVec> rows);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  RatVec& operator[](std::size_t i) { return data_[i]; }
  const RatVec& operator[](std::size_t i) const { return data_[i]; }
  Rat& at(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i][j]; }

  void push_row(RatVec row);
  void append_rows(const Matrix& other);

  bool operator==(const Matrix& o) const { return cols_ == o.cols_ && data_ == o.data_; }

 private:
  std::size_t cols_ = 0;
  std::vector<RatVec> data_;
};

// In-place reduced row echelon form; returns the pivot column of each
// surviving row. Zero rows are removed, so rows() == rank afterwards.
std::vector<std::size_t> rref(Matrix& m);

Matrix rref_copy(const Matrix& m);
std::size_t rank(const Matrix& m);

// Reduce v against an RREF basis, returning the canonical coset
// representative of v modulo the row space.
RatVec reduce_mod(const Matrix& rref_basis, RatVec v);

bool in_row_space(const Matrix& rref_basis, const RatVec& v);
bool row_space_leq(const Matrix& a, const Matrix& b);   // rowsp(a) subset of rowsp(b)
bool row_space_equal(const Matrix& a, const Matrix& b);

// Row space of the union (sum of subspaces), in RREF.
Matrix row_space_sum(const Matrix& a, const Matrix& b);
// Intersection of row spaces, in RREF.
Matrix row_space_intersect(const Matrix& a, const Matrix& b);

// Basis of {x : m x^T = 0}, rows of the result, in RREF.
Matrix null_space(const Matrix& m);

// Rows e_j for the non-pivot coordinates of an RREF basis: canonical
// representatives of a complement of the row space in Q^cols.
Matrix canonical_complement(const Matrix& rref_basis);

Rat det(const Matrix& m);  // square matrices only

Matrix mat_mul(const Matrix& a, const Matrix& b);

}  // namespace ttg
