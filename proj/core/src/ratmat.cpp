#include "ttg/ratmat.hpp"

#include <algorithm>
#include <cassert>

namespace ttg {

Matrix::Matrix(std::initializer_list<std::initializer_list<int>> rows) {
  for (const auto& r : rows) {
    RatVec row;
    row.reserve(r.size());
    for (int x : r) row.emplace_back(x);
    if (cols_ == 0) cols_ = row.size();
    assert(row.size() == cols_);
    data_.push_back(std::move(row));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<RatVec> rows) {
  Matrix m(cols);
  for (auto& r : rows) {
    assert(r.size() == cols);
    m.data_.push_back(std::move(r));
  }
  return m;
}

void Matrix::push_row(RatVec row) {
  assert(row.size() == cols_);
  data_.push_back(std::move(row));
}

void Matrix::append_rows(const Matrix& other) {
  assert(other.cols_ == cols_);
  for (const auto& r : other.data_) data_.push_back(r);
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m[sel][col] == 0) ++sel;
    if (sel == m.rows()) continue;
    std::swap(m[sel], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j < m.cols(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  // drop zero rows
  Matrix out(m.cols());
  for (std::size_t i = 0; i < row; ++i) out.push_row(m[i]);
  m = std::move(out);
  return pivots;
}

Matrix rref_copy(const Matrix& m) {
  Matrix c = m;
  rref(c);
  return c;
}

std::size_t rank(const Matrix& m) { return rref_copy(m).rows(); }

RatVec reduce_mod(const Matrix& basis, RatVec v) {
  assert(v.size() == basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t p = 0;
    while (p < basis.cols() && basis[i][p] == 0) ++p;
    if (p == basis.cols()) continue;
    if (v[p] == 0) continue;
    Rat f = v[p] / basis[i][p];
    for (std::size_t j = p; j < v.size(); ++j) v[j] -= f * basis[i][j];
  }
  return v;
}

bool in_row_space(const Matrix& basis, const RatVec& v) {
  RatVec r = reduce_mod(basis, v);
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
}

bool row_space_leq(const Matrix& a, const Matrix& b) {
  Matrix bb = rref_copy(b);
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!in_row_space(bb, a[i])) return false;
  return true;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
  return rank(a) == rank(b) && row_space_leq(a, b);
}

Matrix row_space_sum(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.cols());
  Matrix s = a;
  s.append_rows(b);
  rref(s);
  return s;
}

Matrix null_space(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix out(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      std::size_t p = pivots[i];
      v[p] = -r[i][free];
    }
    out.push_row(std::move(v));
  }
  rref(out);
  return out;
}

Matrix row_space_intersect(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.cols());
  Matrix ar = rref_copy(a);
  Matrix br = rref_copy(b);
  if (ar.rows() == 0 || br.rows() == 0) return Matrix(a.cols());
  // Left kernel of [ar; br]: coefficients (u, v) with u*ar + v*br = 0 give
  // u*ar in the intersection, and every intersection vector arises this way.
  std::size_t ra = ar.rows(), rb = br.rows();
  // build transpose of [ar; br] so null_space gives the left kernel
  Matrix t(a.cols(), ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t[j][i] = ar[i][j];
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t[j][ra + i] = br[i][j];
  Matrix ker = null_space(t);
  Matrix out(a.cols());
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    RatVec v(a.cols(), Rat(0));
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) v[j] += ker[k][i] * ar[i][j];
    out.push_row(std::move(v));
  }
  rref(out);
  return out;
}

Matrix canonical_complement(const Matrix& basis) {
  std::vector<bool> is_pivot(basis.cols(), false);
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t p = 0;
    while (p < basis.cols() && basis[i][p] == 0) ++p;
    if (p < basis.cols()) is_pivot[p] = true;
  }
  Matrix out(basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    if (is_pivot[j]) continue;
    RatVec v(basis.cols(), Rat(0));
    v[j] = 1;
    out.push_row(std::move(v));
  }
  return out;
}

Rat det(const Matrix& m) {
  assert(m.rows() == m.cols());
  Matrix a = m;
  Rat d(1);
  std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != col) {
      std::swap(a[sel], a[col]);
      d = -d;
    }
    d *= a[col][col];
    Rat inv = Rat(1) / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return d;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace ttg
