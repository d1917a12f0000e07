#include "ttg/parse.hpp"

#include <cctype>

namespace ttg {

namespace {

int parse_int(const std::string& s, std::size_t& i) {
  std::size_t j = i;
  if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
  std::size_t k = j;
  while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
  if (k == j) fail(Errc::ParseError, "expected an integer in '" + s + "'");
  int v = std::stoi(s.substr(i, k - i));
  i = k;
  return v;
}

}  // namespace

SubgroupClass parse_class(const GroupId& g, const std::string& token) {
  auto valid = [&](SubgroupClass k) {
    require_valid_class(g, k);
    return k;
  };
  if (token == "G") return valid(class_full());
  if (token == "T") {
    if (g.kind == GroupKind::Circle) return class_full();
    fail(Errc::InvalidClass, "T names the full circle group only");
  }
  if (token == "SO2") return g.kind == GroupKind::Circle ? class_full() : valid(class_SO2());
  if (token == "O2") return g.kind == GroupKind::O2 ? class_full() : valid(class_O2());
  if (token == "SO3") {
    if (g.kind == GroupKind::SO3) return class_full();
    fail(Errc::InvalidClass, "SO3 names the full rotation group only");
  }
  if (token == "A4") return valid(class_tetra());
  if (token == "S4") return valid(class_octa());
  if (token == "A5") return valid(class_icosa());
  if (token.size() >= 2 && (token[0] == 'C' || token[0] == 'D' || token[0] == 'F')) {
    std::size_t i = 1;
    int n = parse_int(token, i);
    if (i != token.size()) fail(Errc::ParseError, "bad class token '" + token + "'");
    if (token[0] == 'C') return valid(class_C(n));
    if (token[0] == 'D') return valid(class_D(n));
    return valid(class_finite(n));
  }
  fail(Errc::ParseError, "unknown class token '" + token + "'");
}

namespace {

std::string next_token(const std::string& s, std::size_t& i) {
  std::string t;
  while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) t += s[i++];
  if (t.empty()) fail(Errc::ParseError, "expected a class token in '" + s + "'");
  return t;
}

ClassSet parse_primary(const GroupId& g, const std::string& s, std::size_t& i) {
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i >= s.size()) fail(Errc::ParseError, "expected a set term in '" + s + "'");
  if (s.compare(i, 4, "Lct{") == 0) {
    i += 3;
    ClassSet inner = parse_primary(g, s, i);
    return lambda_ct(inner);
  }
  if (s.compare(i, 4, "tail") == 0) {
    i += 4;
    if (i >= s.size() || (s[i] != 'C' && s[i] != 'D')) fail(Errc::ParseError, "tail needs C or D");
    ClassKind series = s[i] == 'C' ? ClassKind::C : ClassKind::D;
    ++i;
    if (i >= s.size() || s[i] != '(') fail(Errc::ParseError, "tail needs (n)");
    ++i;
    int n = parse_int(s, i);
    if (i >= s.size() || s[i] != ')') fail(Errc::ParseError, "tail needs closing )");
    ++i;
    if (!has_series(g, series)) fail(Errc::InvalidClass, "group has no such series");
    ClassSet out = ClassSet::empty(g);
    SeriesPart part{true, {}};
    for (int m = series_start(g, series); m < n; ++m) part.idx.insert(m);
    (series == ClassKind::C ? out.c : out.d) = part;
    return out;
  }
  if (s[i] == '{') {
    ++i;
    ClassSet out = ClassSet::empty(g);
    skip_ws();
    if (i < s.size() && s[i] == '}') {
      ++i;
      return out;
    }
    while (true) {
      skip_ws();
      out.insert(parse_class(g, next_token(s, i)));
      skip_ws();
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == '}') {
        ++i;
        return out;
      }
      fail(Errc::ParseError, "expected , or } in '" + s + "'");
    }
  }
  std::string tok = next_token(s, i);
  if (tok == "all") return ClassSet::all(g);
  return ClassSet::of(g, {parse_class(g, tok)});
}

}  // namespace

ClassSet parse_class_set(const GroupId& g, const std::string& text) {
  std::size_t i = 0;
  ClassSet out = parse_primary(g, text, i);
  while (true) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) return out;
    if (text[i] != '+') fail(Errc::ParseError, "expected + in '" + text + "'");
    ++i;
    out = set_union(out, parse_primary(g, text, i));
  }
}

namespace {

ExprPtr parse_expr_at(const GroupId& g, const std::string& s, std::size_t& i);

void expect(const std::string& s, std::size_t& i, char c) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size() || s[i] != c)
    fail(Errc::ParseError, std::string("expected '") + c + "' in '" + s + "'");
  ++i;
}

ExprPtr parse_expr_at(const GroupId& g, const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i >= s.size()) fail(Errc::ParseError, "expected an expression in '" + s + "'");
  if (s[i] == '0') {
    ++i;
    return expr::zero();
  }
  std::string head;
  while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) head += s[i++];
  if (head == "S0") return expr::sphere0();
  if (head == "cell" || head == "iso") {
    expect(s, i, '(');
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::string tok = next_token(s, i);
    expect(s, i, ')');
    SubgroupClass k = parse_class(g, tok);
    return head == "cell" ? expr::cell(k) : expr::isoclass(k);
  }
  if (head == "basic") {
    expect(s, i, '(');
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::string tok = next_token(s, i);
    expect(s, i, ',');
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    int cutoff = parse_int(s, i);
    expect(s, i, ')');
    return expr::basic(parse_class(g, tok), cutoff);
  }
  if (head == "wedge" || head == "smash") {
    expect(s, i, '(');
    ExprPtr a = parse_expr_at(g, s, i);
    expect(s, i, ',');
    ExprPtr b = parse_expr_at(g, s, i);
    expect(s, i, ')');
    return head == "wedge" ? expr::wedge(a, b) : expr::smash(a, b);
  }
  if (head == "susp") {
    expect(s, i, '(');
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    int n = parse_int(s, i);
    expect(s, i, ',');
    ExprPtr a = parse_expr_at(g, s, i);
    expect(s, i, ')');
    return expr::susp(n, a);
  }
  if (head == "dual") {
    expect(s, i, '(');
    ExprPtr a = parse_expr_at(g, s, i);
    expect(s, i, ')');
    return expr::dual(a);
  }
  fail(Errc::ParseError, "unknown expression head '" + head + "'");
}

}  // namespace

ExprPtr parse_expr(const GroupId& g, const std::string& text) {
  std::size_t i = 0;
  ExprPtr e = parse_expr_at(g, text, i);
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size()) fail(Errc::ParseError, "trailing input in '" + text + "'");
  return e;
}

}  // namespace ttg
