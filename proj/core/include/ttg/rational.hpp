#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ttg/errors.hpp"

namespace ttg {

// Exact rational scalar used everywhere; cpp_rational keeps values in lowest
// terms with positive denominator automatically.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Canonical rendering: "p" for integers, "p/q" otherwise (lowest terms, q > 0).
inline std::string rat_str(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts "p" and "p/q" with optional sign; q must be nonzero.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(Errc::ParseError, "zero denominator in rational: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad rational literal: " + s);
  }
}

}  // namespace ttg
