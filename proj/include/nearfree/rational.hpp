#pragma once
// Exact scalar arithmetic: arbitrary-precision integers and canonical
// rationals (numerator/denominator coprime, denominator > 0).
//
// These are thin aliases over Boost.Multiprecision so the backend lives in
// exactly one place.  Everything downstream is exact; floating point is
// allowed only in rendering code.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "nearfree/errors.hpp"

namespace nearfree {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat rabs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int ilcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// floor(sqrt(a)), a >= 0.
inline Int isqrt(const Int& a) {
  if (a < 0) throw UndefinedInputError("isqrt: negative argument");
  return boost::multiprecision::sqrt(a);
}

inline bool is_square(const Int& a, Int* root = nullptr) {
  if (a < 0) return false;
  Int r = isqrt(a);
  if (r * r != a) return false;
  if (root) *root = r;
  return true;
}

// Exact square root of a non-negative rational, when it exists in Q.
inline bool rat_sqrt(const Rat& q, Rat* out) {
  if (q < 0) return false;
  Int rn, rd;
  if (!is_square(num(q), &rn) || !is_square(den(q), &rd)) return false;
  if (out) *out = Rat(rn, rd);
  return true;
}

inline Int int_floor(const Rat& q) {
  Int n = num(q), d = den(q);  // d > 0
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

inline Int int_ceil(const Rat& q) { return -int_floor(-q); }

// Position of the most significant bit (floor(log2 |a|)), a != 0.
inline long msb_index(const Int& a) {
  return static_cast<long>(boost::multiprecision::msb(iabs(a)));
}

// Some k with 2^k <= |q|; q != 0.  Used to size dyadic rounding grids.
inline long floor_log2(const Rat& q) {
  if (q == 0) throw UndefinedInputError("floor_log2: zero");
  long est = msb_index(num(q)) - msb_index(den(q));
  // est is within 1 of the truth; nudge down until 2^est <= |q|.
  Rat aq = rabs(q);
  while (true) {
    Rat p = est >= 0 ? Rat(Int(1) << est) : Rat(Int(1), Int(1) << (-est));
    if (p <= aq) return est;
    --est;
  }
}

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string rat_str(const Rat& q) {
  Int n = num(q), d = den(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

// Parses "p" or "p/q" (optional leading minus on p; q > 0 required).
// This is the strict file-format syntax, so no whitespace and no signs
// inside the denominator.
inline Rat parse_rat(const std::string& s) {
  auto is_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string body = s;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  std::string ns = body, ds = "1";
  auto slash = body.find('/');
  if (slash != std::string::npos) {
    ns = body.substr(0, slash);
    ds = body.substr(slash + 1);
  }
  if (!is_digits(ns) || !is_digits(ds))
    throw ParseError("malformed rational literal: '" + s + "'");
  Int n(ns), d(ds);
  if (d == 0) throw ParseError("zero denominator in rational literal: '" + s + "'");
  if (neg) n = -n;
  return Rat(n, d);
}

inline double to_double(const Rat& q) { return q.template convert_to<double>(); }

inline Int binom2(const Int& n) { return n * (n - 1) / 2; }  // C(n, 2)

}  // namespace nearfree
