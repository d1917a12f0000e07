#include "ttg/semifree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ttg::semifree {

std::string laurent_str(const LaurentPoly& p) {
  if (p.coeff.empty()) return "0";
  std::string out;
  for (auto& [d, v] : p.coeff) {
    if (!out.empty()) out += "+";
    if (d == 0) {
      out += std::to_string(v);
      continue;
    }
    if (v != 1) out += std::to_string(v);
    out += "t";
    if (d != 1) out += "^" + std::to_string(d);
  }
  return out;
}

LaurentPoly parse_laurent(const std::string& s) {
  LaurentPoly p;
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) fail(Errc::ParseError, "empty polynomial");
  std::size_t i = 0;
  bool first = true;
  while (i < t.size()) {
    long long sign = 1;
    if (t[i] == '+') {
      ++i;
    } else if (t[i] == '-') {
      sign = -1;
      ++i;
    } else if (!first) {
      fail(Errc::ParseError, "expected + between terms in " + s);
    }
    first = false;
    long long coeff = 1;
    bool saw_digit = false;
    std::size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    if (j > i) {
      coeff = std::stoll(t.substr(i, j - i));
      saw_digit = true;
      i = j;
    }
    int deg = 0;
    if (i < t.size() && t[i] == 't') {
      ++i;
      deg = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::size_t k = i;
        if (k < t.size() && (t[k] == '-' || t[k] == '+')) ++k;
        while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
        if (k == i) fail(Errc::ParseError, "missing exponent in " + s);
        deg = std::stoi(t.substr(i, k - i));
        i = k;
      }
    } else if (!saw_digit) {
      fail(Errc::ParseError, "bad term in " + s);
    }
    if (sign * coeff < 0) fail(Errc::ParseError, "negative coefficient in " + s);
    p.add(deg, sign * coeff);
  }
  return p;
}

int Part::dim() const {
  int t = 0;
  for (auto& [d, v] : v_dims) t += v;
  return t;
}

int Part::offset(int degree) const {
  int off = 0;
  for (auto& [d, v] : v_dims) {
    if (d >= degree) break;
    off += v;
  }
  return off;
}

int Part::dim_v_geq(int d) const {
  int t = 0;
  for (auto& [deg, v] : v_dims)
    if (deg >= d) t += v;
  return t;
}

Matrix Part::nbar(int d) const {
  if (filt.empty()) return Matrix(static_cast<std::size_t>(dim()));
  if (d < filt.begin()->first) return Matrix::identity(static_cast<std::size_t>(dim()));
  if (d > filt.rbegin()->first) return Matrix(static_cast<std::size_t>(dim()));
  auto it = filt.find(d);
  if (it == filt.end()) fail(Errc::MalformedDescriptor, "filtration window has a gap");
  return it->second;
}

int Part::dim_nbar(int d) const { return static_cast<int>(nbar(d).rows()); }

Matrix Part::degree_block(int degree) const {
  Matrix m(static_cast<std::size_t>(dim()));
  auto it = v_dims.find(degree);
  if (it == v_dims.end()) return m;
  int off = offset(degree);
  for (int i = 0; i < it->second; ++i) {
    RatVec row(static_cast<std::size_t>(dim()), Rat(0));
    row[static_cast<std::size_t>(off + i)] = 1;
    m.push_row(std::move(row));
  }
  return m;
}

Matrix Part::below(int degree) const {
  Matrix m(static_cast<std::size_t>(dim()));
  int count = offset(degree);
  for (int i = 0; i < count; ++i) {
    RatVec row(static_cast<std::size_t>(dim()), Rat(0));
    row[static_cast<std::size_t>(i)] = 1;
    m.push_row(std::move(row));
  }
  return m;
}

namespace {

int norm_parity(int n) { return ((n % 2) + 2) % 2; }

ValidationResult bad(const std::string& reason) { return {false, reason}; }

ValidationResult validate_part(const Part& p, const char* label) {
  for (auto& [d, v] : p.v_dims) {
    if (v <= 0) return bad(std::string(label) + ": nonpositive dimension at degree " + std::to_string(d));
    if (norm_parity(d) != p.parity) return bad(std::string(label) + ": degree of wrong parity in v_dims");
  }
  if (p.empty()) {
    if (!p.filt.empty()) return bad(std::string(label) + ": filtration on an empty part");
    return {};
  }
  if (p.filt.empty()) return bad(std::string(label) + ": nonzero part needs a filtration window");
  int prev = 0;
  bool first = true;
  for (auto& [d, m] : p.filt) {
    if (norm_parity(d) != p.parity) return bad(std::string(label) + ": filtration degree of wrong parity");
    if (!first && d != prev + 2) return bad(std::string(label) + ": filtration window has a gap");
    prev = d;
    first = false;
    if (m.cols() != static_cast<std::size_t>(p.dim()))
      return bad(std::string(label) + ": filtration matrix at degree " + std::to_string(d) +
                 " has wrong width");
    if (rank(m) != m.rows())
      return bad(std::string(label) + ": dependent rows at degree " + std::to_string(d));
  }
  // nesting, including the implicit full space below the window
  for (auto it = p.filt.begin(); it != p.filt.end(); ++it) {
    auto next = std::next(it);
    const Matrix upper = (next == p.filt.end()) ? Matrix(static_cast<std::size_t>(p.dim())) : next->second;
    if (!row_space_leq(upper, it->second))
      return bad(std::string(label) + ": nesting fails between degrees " + std::to_string(it->first) +
                 " and " + std::to_string(it->first + 2));
  }
  return {};
}

Part canonicalize_part(Part p) {
  for (auto& [d, m] : p.filt) rref(m);
  return p;
}

}  // namespace

ValidationResult validate(const WideSphere& w) {
  if (w.even.parity != 0 || w.odd.parity != 1) return bad("parity tags out of place");
  ValidationResult r = validate_part(w.even, "even");
  if (!r.ok) return r;
  return validate_part(w.odd, "odd");
}

WideSphere canonicalize(WideSphere w) {
  w.even = canonicalize_part(std::move(w.even));
  w.odd = canonicalize_part(std::move(w.odd));
  return w;
}

bool same_presentation(const WideSphere& a, const WideSphere& b) {
  for (int parity = 0; parity < 2; ++parity) {
    const Part& pa = a.part(parity);
    const Part& pb = b.part(parity);
    if (pa.v_dims != pb.v_dims) return false;
    if (pa.empty()) continue;
    int lo = std::min(pa.filt.begin()->first, pb.filt.begin()->first);
    int hi = std::max(pa.filt.rbegin()->first, pb.filt.rbegin()->first);
    for (int d = lo; d <= hi; d += 2)
      if (!row_space_equal(pa.nbar(d), pb.nbar(d))) return false;
  }
  return true;
}

LaurentPoly p_fixed(const WideSphere& w) {
  LaurentPoly p;
  for (int parity = 0; parity < 2; ++parity)
    for (auto& [d, v] : w.part(parity).v_dims) p.add(d, v);
  return p;
}

LaurentPoly p_borel_jump(const WideSphere& w) {
  LaurentPoly p;
  for (int parity = 0; parity < 2; ++parity) {
    const Part& pt = w.part(parity);
    if (pt.filt.empty()) continue;
    int lo = pt.filt.begin()->first - 2;
    int hi = pt.filt.rbegin()->first;
    for (int d = lo; d <= hi; d += 2) p.add(d, pt.dim_nbar(d) - pt.dim_nbar(d + 2));
  }
  return p;
}

namespace {

// Twisted variant of Condition 9.1 for one part:
//  (1) dim Nbar_d = dim |V|_{>= d+2k} everywhere, and
//  (2) Nbar_d meets the coordinates of degree < d+2k trivially.
// k = 0 is the untwisted condition; the second clause is the retract-stable
// sharpening of "V meets cN trivially" (they agree whenever a parity meets
// at most two degrees, in particular on every二 small example).
bool part_k_twisted(const Part& p, int k) {
  if (p.empty()) return true;
  int lo = p.filt.begin()->first;
  int hi = p.filt.rbegin()->first;
  if (!p.v_dims.empty()) {
    lo = std::min(lo, p.v_dims.begin()->first - 2 * k);
    hi = std::max(hi, p.v_dims.rbegin()->first - 2 * k);
  }
  for (int d = lo - 2; d <= hi + 2; d += 2)
    if (p.dim_nbar(d) != p.dim_v_geq(d + 2 * k)) return false;
  for (auto& [d, m] : p.filt) {
    Matrix low = p.below(d + 2 * k);
    if (low.rows() == 0 || m.rows() == 0) continue;
    Matrix stacked = m;
    stacked.append_rows(low);
    if (rank(stacked) != m.rows() + low.rows()) return false;
  }
  return true;
}

}  // namespace

bool is_k_twisted(const WideSphere& w, int k) {
  return part_k_twisted(w.even, k) && part_k_twisted(w.odd, k);
}

bool is_untwisted(const WideSphere& w) { return is_k_twisted(w, 0); }

WideSphere direct_sum(const WideSphere& a, const WideSphere& b) {
  WideSphere out;
  for (int parity = 0; parity < 2; ++parity) {
    const Part& pa = a.part(parity);
    const Part& pb = b.part(parity);
    Part& po = out.part(parity);
    po.parity = parity;
    for (auto& [d, v] : pa.v_dims) po.v_dims[d] += v;
    for (auto& [d, v] : pb.v_dims) po.v_dims[d] += v;
    if (po.v_dims.empty()) continue;
    // coordinate embeddings: within each degree the a-block precedes the b-block
    auto embed = [&](const Part& src, bool is_b) {
      std::vector<int> map(static_cast<std::size_t>(src.dim()));
      int i = 0;
      for (auto& [d, v] : src.v_dims) {
        int base = po.offset(d) + (is_b ? (pa.v_dims.count(d) ? pa.v_dims.at(d) : 0) : 0);
        for (int j = 0; j < v; ++j) map[static_cast<std::size_t>(i++)] = base + j;
      }
      return map;
    };
    std::vector<int> ma = embed(pa, false), mb = embed(pb, true);
    int lo = 0, hi = 0;
    bool have = false;
    for (const Part* src : {&pa, &pb}) {
      if (src->filt.empty()) continue;
      int l = src->filt.begin()->first, h = src->filt.rbegin()->first;
      lo = have ? std::min(lo, l) : l;
      hi = have ? std::max(hi, h) : h;
      have = true;
    }
    if (!have) fail(Errc::MalformedDescriptor, "nonzero part without filtration");
    for (int d = lo; d <= hi; d += 2) {
      Matrix m(static_cast<std::size_t>(po.dim()));
      auto push = [&](const Matrix& rows, const std::vector<int>& map) {
        for (std::size_t r = 0; r < rows.rows(); ++r) {
          RatVec row(static_cast<std::size_t>(po.dim()), Rat(0));
          for (std::size_t c = 0; c < rows.cols(); ++c) row[static_cast<std::size_t>(map[c])] = rows[r][c];
          m.push_row(std::move(row));
        }
      };
      push(pa.nbar(d), ma);
      push(pb.nbar(d), mb);
      rref(m);
      po.filt.emplace(d, std::move(m));
    }
  }
  return out;
}

WideSphere suspend(const WideSphere& w, int n) {
  WideSphere out;
  for (int parity = 0; parity < 2; ++parity) {
    const Part& src = w.part(parity);
    Part& dst = out.part(norm_parity(parity + n));
    dst.parity = norm_parity(parity + n);
    for (auto& [d, v] : src.v_dims) dst.v_dims.emplace(d + n, v);
    for (auto& [d, m] : src.filt) dst.filt.emplace(d + n, m);
  }
  return out;
}

WideSphere smash_rep_sphere(const WideSphere& w, int k) {
  WideSphere out = w;
  for (int parity = 0; parity < 2; ++parity) {
    Part& p = out.part(parity);
    std::map<int, Matrix> shifted;
    for (auto& [d, m] : p.filt) shifted.emplace(d - 2 * k, std::move(m));
    p.filt = std::move(shifted);
  }
  return out;
}

WideSphere sphere(int n) {
  WideSphere out;
  Part& p = out.part(norm_parity(n));
  p.v_dims.emplace(n, 1);
  p.filt.emplace(n, Matrix::identity(1));
  return out;
}

HomotopyClasses homotopy_classes(const WideSphere& w, int n) {
  HomotopyClasses h;
  h.n = n;
  h.provisional = !w.even.empty() && !w.odd.empty();
  const Part& same = w.part(norm_parity(n));
  const Part& opp = w.part(norm_parity(n + 1));
  // same-parity classes are carried by V_n; strict squares land in Nbar_n
  auto it = same.v_dims.find(n);
  if (it != same.v_dims.end()) {
    h.v_dim = it->second;
    Matrix strict = row_space_intersect(same.degree_block(n), same.nbar(n));
    Matrix coeffs(static_cast<std::size_t>(h.v_dim));
    int off = same.offset(n);
    for (std::size_t r = 0; r < strict.rows(); ++r) {
      RatVec row(static_cast<std::size_t>(h.v_dim));
      for (int j = 0; j < h.v_dim; ++j) row[static_cast<std::size_t>(j)] = strict[r][static_cast<std::size_t>(off + j)];
      coeffs.push_row(std::move(row));
    }
    h.strict_coeffs = std::move(coeffs);
  } else {
    h.strict_coeffs = Matrix(0);
  }
  // opposite-parity classes: |V| / (Nbar_{n+1} + V_{n+1})
  if (!opp.empty()) {
    Matrix denom = row_space_sum(opp.nbar(n + 1), opp.degree_block(n + 1));
    h.ext_reps = canonical_complement(denom);
    h.ext_dim = static_cast<int>(h.ext_reps.rows());
  } else {
    h.ext_reps = Matrix(0);
    h.ext_dim = 0;
  }
  return h;
}

namespace {

WideSphere attach_extension(const WideSphere& w, int n, RatVec omega) {
  WideSphere out = w;
  Part& p = out.part(norm_parity(n + 1));
  // reduce the lift to the canonical coset representative
  if (!p.empty()) omega = reduce_mod(rref_copy(p.nbar(n + 1)), std::move(omega));

  int idx = p.offset(n + 1) + (p.v_dims.count(n + 1) ? p.v_dims.at(n + 1) : 0);
  p.v_dims[n + 1] += 1;
  int dim = p.dim();
  auto widen = [&](const RatVec& v) {
    RatVec row(static_cast<std::size_t>(dim), Rat(0));
    for (std::size_t c = 0, t = 0; c < row.size(); ++c) {
      if (static_cast<int>(c) == idx) continue;
      row[c] = v[t++];
    }
    return row;
  };
  RatVec new_row = widen(omega);
  new_row[static_cast<std::size_t>(idx)] = 1;

  std::map<int, Matrix> old = std::move(p.filt);
  p.filt.clear();
  int lo = old.empty() ? n + 1 : std::min(old.begin()->first, n + 1);
  int hi = old.empty() ? n + 1 : std::max(old.rbegin()->first, n + 1);
  for (int d = lo; d <= hi; d += 2) {
    Matrix src;
    if (old.empty()) {
      src = Matrix(static_cast<std::size_t>(dim - 1));
    } else if (d < old.begin()->first) {
      src = Matrix::identity(static_cast<std::size_t>(dim - 1));
    } else if (d > old.rbegin()->first) {
      src = Matrix(static_cast<std::size_t>(dim - 1));
    } else {
      src = old.at(d);
    }
    Matrix m(static_cast<std::size_t>(dim));
    for (std::size_t r = 0; r < src.rows(); ++r) m.push_row(widen(src[r]));
    if (d <= n + 1) m.push_row(new_row);
    rref(m);
    p.filt.emplace(d, std::move(m));
  }
  return out;
}

WideSphere attach_split(const WideSphere& w, int n, const RatVec& vn_coeffs) {
  if (!is_untwisted(w))
    fail(Errc::SplitUnavailable,
         "same-parity attachment only splits off a sphere when the source is untwisted");
  const Part& p = w.part(norm_parity(n));
  auto it = p.v_dims.find(n);
  int vdim = it == p.v_dims.end() ? 0 : it->second;
  int off = p.offset(n);
  RatVec v(static_cast<std::size_t>(p.dim()), Rat(0));
  for (int j = 0; j < vdim; ++j) v[static_cast<std::size_t>(off + j)] = vn_coeffs[static_cast<std::size_t>(j)];
  if (!in_row_space(rref_copy(p.nbar(n)), v))
    fail(Errc::ClassNotInGroup, "class is not represented by a morphism S^n -> W");
  // pivot: last nonzero coordinate of the split vector
  int pivot = -1;
  for (int j = vdim - 1; j >= 0; --j)
    if (vn_coeffs[static_cast<std::size_t>(j)] != 0) {
      pivot = off + j;
      break;
    }
  WideSphere out = w;
  Part& q = out.part(norm_parity(n));
  auto project = [&](const RatVec& row) {
    RatVec r = row;
    if (r[static_cast<std::size_t>(pivot)] != 0) {
      Rat f = r[static_cast<std::size_t>(pivot)] / v[static_cast<std::size_t>(pivot)];
      for (std::size_t c = 0; c < r.size(); ++c) r[c] -= f * v[c];
    }
    RatVec slim;
    slim.reserve(r.size() - 1);
    for (std::size_t c = 0; c < r.size(); ++c)
      if (static_cast<int>(c) != pivot) slim.push_back(r[c]);
    return slim;
  };
  std::map<int, Matrix> old = std::move(q.filt);
  q.filt.clear();
  if (it->second == 1)
    q.v_dims.erase(n);
  else
    q.v_dims[n] -= 1;
  if (q.v_dims.empty()) return out;
  for (auto& [d, m] : old) {
    Matrix nm(static_cast<std::size_t>(q.dim()));
    for (std::size_t r = 0; r < m.rows(); ++r) nm.push_row(project(m[r]));
    rref(nm);
    q.filt.emplace(d, std::move(nm));
  }
  return out;
}

}  // namespace

WideSphere attach_cell(const WideSphere& w, int n, const RatVec& cls) {
  HomotopyClasses h = homotopy_classes(w, n);
  if (static_cast<int>(cls.size()) != h.total_dim())
    fail(Errc::ClassNotInGroup, "coefficient vector has length " + std::to_string(cls.size()) +
                                    ", expected " + std::to_string(h.total_dim()));
  bool same_zero = true, ext_zero = true;
  for (int i = 0; i < h.v_dim; ++i)
    if (cls[static_cast<std::size_t>(i)] != 0) same_zero = false;
  for (int i = 0; i < h.ext_dim; ++i)
    if (cls[static_cast<std::size_t>(h.v_dim + i)] != 0) ext_zero = false;

  if (same_zero && ext_zero) return direct_sum(w, sphere(n + 1));
  if (!same_zero) {
    // the split swallows the attachment; any quotient-parity component is
    // carried along unchanged (the mixed case of the cofibre lemma)
    RatVec vn(cls.begin(), cls.begin() + h.v_dim);
    return attach_split(w, n, vn);
  }
  const Part& opp = w.part(norm_parity(n + 1));
  RatVec omega(static_cast<std::size_t>(opp.dim()), Rat(0));
  for (int i = 0; i < h.ext_dim; ++i) {
    const Rat& a = cls[static_cast<std::size_t>(h.v_dim + i)];
    if (a == 0) continue;
    for (std::size_t c = 0; c < omega.size(); ++c) omega[c] += a * h.ext_reps[static_cast<std::size_t>(i)][c];
  }
  return attach_extension(w, n, std::move(omega));
}

namespace {

// Two-block atoms: a subspace W of B_1 + B_2 decomposes into lines inside
// B_1, lines inside B_2 and graph lines joining them; the triple of
// multiplicities is a complete isomorphism invariant.
std::vector<Part> enumerate_part(int parity, const LaurentPoly& p) {
  std::vector<Part> out;
  std::vector<std::pair<int, int>> blocks;
  for (auto& [d, v] : p.coeff) blocks.emplace_back(d, static_cast<int>(v));
  Part base{parity, {}, {}};
  if (blocks.empty()) {
    out.push_back(base);
    return out;
  }
  for (auto& [d, v] : blocks) base.v_dims.emplace(d, v);
  if (blocks.size() == 1) {
    Part p1 = base;
    p1.filt.emplace(blocks[0].first, Matrix::identity(static_cast<std::size_t>(blocks[0].second)));
    out.push_back(std::move(p1));
    return out;
  }
  if (blocks.size() > 2)
    fail(Errc::TooLarge,
         "a parity meeting three or more degrees has isomorphism moduli; exact enumeration is refused");
  auto [d1, c1] = blocks[0];
  auto [d2, c2] = blocks[1];
  for (int g = 0; g <= std::min(c1, c2); ++g)
    for (int x = 0; x + g <= c1; ++x) {
      int y = c2 - x - g;
      if (y < 0 || y + g > c2) continue;
      Matrix wsub(static_cast<std::size_t>(c1 + c2));
      for (int i = 0; i < x; ++i) {
        RatVec row(static_cast<std::size_t>(c1 + c2), Rat(0));
        row[static_cast<std::size_t>(i)] = 1;
        wsub.push_row(std::move(row));
      }
      for (int i = 0; i < y; ++i) {
        RatVec row(static_cast<std::size_t>(c1 + c2), Rat(0));
        row[static_cast<std::size_t>(c1 + i)] = 1;
        wsub.push_row(std::move(row));
      }
      for (int i = 0; i < g; ++i) {
        RatVec row(static_cast<std::size_t>(c1 + c2), Rat(0));
        row[static_cast<std::size_t>(x + i)] = 1;
        row[static_cast<std::size_t>(c1 + y + i)] = 1;
        wsub.push_row(std::move(row));
      }
      rref(wsub);
      Part pt = base;
      for (int d = d1 + 2; d <= d2; d += 2) pt.filt.emplace(d, wsub);
      out.push_back(std::move(pt));
    }
  return out;
}

}  // namespace

std::vector<WideSphere> enumerate_classes(const LaurentPoly& p) {
  for (auto& [d, v] : p.coeff)
    if (v < 0) fail(Errc::MalformedDescriptor, "negative coefficient");
  LaurentPoly pe = p.part(0), po = p.part(1);
  if (pe.total() > 3 || po.total() > 3)
    fail(Errc::TooLarge, "coefficient sum exceeds 3 per parity");
  std::vector<Part> evens = enumerate_part(0, pe);
  std::vector<Part> odds = enumerate_part(1, po);
  std::vector<WideSphere> out;
  for (const Part& e : evens)
    for (const Part& o : odds) {
      WideSphere w;
      w.even = e;
      w.odd = o;
      out.push_back(std::move(w));
    }
  return out;
}

namespace {

// Transporter from the filtration of pa to that of pb inside the group of
// block-diagonal (degree-preserving) base changes: a linear space of
// matrices; the parts are isomorphic iff it contains an invertible element.
bool parts_isomorphic(const Part& pa, const Part& pb) {
  if (pa.v_dims != pb.v_dims) return false;
  if (pa.empty()) return true;
  int n = pa.dim();
  if (n > 3) fail(Errc::TooLarge, "isomorphism testing is limited to dimension 3 per parity");
  int lo = pa.filt.begin()->first, hi = pa.filt.rbegin()->first;
  if (!pb.filt.empty()) {
    lo = std::min(lo, pb.filt.begin()->first);
    hi = std::max(hi, pb.filt.rbegin()->first);
  }
  for (int d = lo; d <= hi; d += 2)
    if (pa.dim_nbar(d) != pb.dim_nbar(d)) return false;

  // variables: entries of the block-diagonal matrix g
  std::vector<std::pair<int, int>> slots;
  for (auto& [d, v] : pa.v_dims) {
    int off = pa.offset(d);
    for (int i = 0; i < v; ++i)
      for (int j = 0; j < v; ++j) slots.emplace_back(off + i, off + j);
  }
  auto slot_index = [&](int i, int j) {
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (slots[s].first == i && slots[s].second == j) return static_cast<int>(s);
    return -1;
  };

  // constraints: for every window degree and basis row r of Nbar_a(d), the
  // image r * g^T reduces to zero against Nbar_b(d)
  Matrix constraints(slots.size());
  for (int d = lo; d <= hi; d += 2) {
    Matrix na = pa.nbar(d);
    Matrix nb = rref_copy(pb.nbar(d));
    std::vector<std::size_t> bpivots;
    {
      Matrix tmp = pb.nbar(d);
      bpivots = rref(tmp);
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (auto p : bpivots) is_pivot[p] = true;
    for (std::size_t r = 0; r < na.rows(); ++r) {
      // y_i = sum_j g[i][j] * na[r][j]; requirement: y - (projection onto
      // rowspace(nb)) = 0, expressed per non-pivot coordinate after
      // eliminating pivot coordinates
      // build symbolic y as vector of linear forms over slots
      std::vector<RatVec> forms(static_cast<std::size_t>(n), RatVec(slots.size(), Rat(0)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int s = slot_index(i, j);
          if (s >= 0) forms[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] = na[r][static_cast<std::size_t>(j)];
        }
      // eliminate via nb's rows: subtract forms[pivot] * nb_row
      for (std::size_t br = 0; br < nb.rows(); ++br) {
        std::size_t pcol = 0;
        while (pcol < nb.cols() && nb[br][pcol] == 0) ++pcol;
        if (pcol == nb.cols()) continue;
        RatVec pivot_form = forms[pcol];
        for (std::size_t c = 0; c < nb.cols(); ++c) {
          if (nb[br][c] == 0) continue;
          for (std::size_t s = 0; s < slots.size(); ++s)
            if (c != pcol) forms[c][s] -= nb[br][c] * pivot_form[s];
        }
        for (std::size_t s = 0; s < slots.size(); ++s) forms[pcol][s] = 0;
      }
      for (int i = 0; i < n; ++i) {
        bool nonzero = false;
        for (const Rat& x : forms[static_cast<std::size_t>(i)])
          if (x != 0) nonzero = true;
        if (nonzero) constraints.push_row(forms[static_cast<std::size_t>(i)]);
      }
    }
  }
  Matrix basis = null_space(constraints);
  if (basis.rows() == 0) return false;

  // search a grid for an invertible combination; the determinant has total
  // degree <= n, so values {0..n} per coordinate decide identically-zero
  std::size_t t = basis.rows();
  std::vector<int> lambda(t, 0);
  auto make_g = [&]() {
    Matrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < t; ++b) {
      if (lambda[b] == 0) continue;
      for (std::size_t s = 0; s < slots.size(); ++s)
        g[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] +=
            Rat(lambda[b]) * basis[b][s];
    }
    return g;
  };
  while (true) {
    Matrix g = make_g();
    if (det(g) != 0) return true;
    std::size_t pos = 0;
    while (pos < t && lambda[pos] == n) lambda[pos++] = 0;
    if (pos == t) return false;
    ++lambda[pos];
  }
}

}  // namespace

bool is_isomorphic(const WideSphere& a, const WideSphere& b) {
  return parts_isomorphic(a.even, b.even) && parts_isomorphic(a.odd, b.odd);
}

}  // namespace ttg::semifree
