#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ttg/errors.hpp"
#include "ttg/ratmat.hpp"

namespace ttg::semifree {

// Laurent polynomial with non-negative integer coefficients (dimension
// counts); keys carry their parity.
struct LaurentPoly {
  std::map<int, long long> coeff;

  long long at(int d) const {
    auto it = coeff.find(d);
    return it == coeff.end() ? 0 : it->second;
  }
  void add(int d, long long v) {
    if (v == 0) return;
    auto [it, fresh] = coeff.emplace(d, 0);
    it->second += v;
    if (it->second == 0) coeff.erase(it);
  }
  long long total() const {
    long long t = 0;
    for (auto& [d, v] : coeff) t += v;
    return t;
  }
  LaurentPoly part(int parity) const {
    LaurentPoly p;
    for (auto& [d, v] : coeff)
      if (((d % 2) + 2) % 2 == parity) p.coeff.emplace(d, v);
    return p;
  }
  LaurentPoly shifted(int s) const {  // multiply by t^s
    LaurentPoly p;
    for (auto& [d, v] : coeff) p.coeff.emplace(d + s, v);
    return p;
  }
  bool operator==(const LaurentPoly&) const = default;
};

std::string laurent_str(const LaurentPoly& p);
LaurentPoly parse_laurent(const std::string& s);

// One parity half of a wide sphere: graded dimensions of V and the
// normalized filtration Nbar, stored on a materialized window of degrees
// (full below the window, zero above it). Coordinates of |V| are ordered by
// ascending degree of the underlying V-basis.
struct Part {
  int parity = 0;
  std::map<int, int> v_dims;   // degree -> dim, entries positive
  std::map<int, Matrix> filt;  // degree -> Nbar_d row basis; contiguous keys, step 2

  bool empty() const { return v_dims.empty(); }
  int dim() const;
  int offset(int degree) const;        // first coordinate of the degree block
  int dim_v_geq(int d) const;
  Matrix nbar(int d) const;
  int dim_nbar(int d) const;
  Matrix degree_block(int degree) const;  // e_j rows spanning the V_degree block
  Matrix below(int degree) const;         // e_j rows for coordinates of degree < given
};

struct WideSphere {
  Part even{0, {}, {}};
  Part odd{1, {}, {}};

  const Part& part(int parity) const { return parity % 2 ? odd : even; }
  Part& part(int parity) { return parity % 2 ? odd : even; }
};

struct ValidationResult {
  bool ok = true;
  std::string reason;
};

// Checks parity bookkeeping, window shape, row independence, nesting and
// boundedness; reports the first violated invariant.
ValidationResult validate(const WideSphere& w);
// Row-reduces every filtration matrix (precondition: validate(w).ok).
WideSphere canonicalize(WideSphere w);

// Structural equality of canonical presentations (same graded dimensions and
// the same filtration subspaces in every degree).
bool same_presentation(const WideSphere& a, const WideSphere& b);

LaurentPoly p_fixed(const WideSphere& w);
LaurentPoly p_borel_jump(const WideSphere& w);

bool is_untwisted(const WideSphere& w);
bool is_k_twisted(const WideSphere& w, int k);
inline bool in_thick_sphere(const WideSphere& w, int k) { return is_k_twisted(w, k); }

WideSphere direct_sum(const WideSphere& a, const WideSphere& b);
WideSphere suspend(const WideSphere& w, int n);
WideSphere smash_rep_sphere(const WideSphere& w, int k);

WideSphere sphere(int n);  // the S^n model

// [S^n, W]_0 in the algebraic model. For n of the same parity as a part the
// classes are carried by V_n and the subgroup realized by strict morphisms is
// V_n meet Nbar_n; for the opposite parity they form the quotient
// |V| / (Nbar_{n+1} + V_{n+1}).
struct HomotopyClasses {
  int n = 0;
  bool provisional = false;  // W has both parities; parts reported as a sum
  int v_dim = 0;             // dim V_n (same-parity presentation)
  Matrix strict_coeffs;      // rows: V_n-coordinate vectors spanning the representable classes
  int ext_dim = 0;           // dim of the opposite-parity quotient
  Matrix ext_reps;           // rows: canonical coset representatives in |V| coordinates
  int total_dim() const { return v_dim + ext_dim; }
};
HomotopyClasses homotopy_classes(const WideSphere& w, int n);

// Cofibre of a map S^n -> W given by a coefficient vector over
// homotopy_classes(w, n): the same-parity V_n coordinates first, then the
// opposite-parity quotient coordinates. The zero class yields
// W v S^{n+1}; a nonzero quotient class yields the extension; a nonzero
// same-parity class on an untwisted W splits off the matched sphere.
WideSphere attach_cell(const WideSphere& w, int n, const RatVec& cls);

// Canonical representatives of the isomorphism classes of wide spheres with
// p_1 = p_T = p. Coefficient sum must be at most 3 per parity, and each
// parity may meet at most two degrees (beyond that the orbit set acquires
// moduli and is refused).
std::vector<WideSphere> enumerate_classes(const LaurentPoly& p);

// Exact isomorphism test (degreewise base change carrying one filtration to
// the other); total V-dimension at most 3 per parity.
bool is_isomorphic(const WideSphere& a, const WideSphere& b);

}  // namespace ttg::semifree
