#pragma once
// Exact interval arithmetic over Q: closed rational intervals, complex
// rational points, and complex boxes (rectangles with rational corners).
// These are the primitives behind certified root isolation; every bound is
// computed exactly, so inclusion statements are proofs, not estimates.

#include <algorithm>
#include <optional>
#include <string>

#include "nearfree/errors.hpp"
#include "nearfree/poly.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

// Closed interval [lo, hi].
struct QI {
  Rat lo, hi;

  QI() : lo(0), hi(0) {}
  QI(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {
    if (lo > hi) throw UndefinedInputError("QI: lo > hi");
  }
  static QI point(const Rat& x) { return QI(x, x); }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool contains(const QI& o) const { return lo <= o.lo && o.hi <= hi; }
  // Containment in the interior, strict on both sides.
  bool contains_interior(const QI& o) const { return lo < o.lo && o.hi < hi; }

  // max(|x| : x in interval)
  Rat mag() const { return std::max(rabs(lo), rabs(hi)); }

  bool operator==(const QI& o) const { return lo == o.lo && hi == o.hi; }
};

inline QI operator+(const QI& a, const QI& b) { return QI(a.lo + b.lo, a.hi + b.hi); }
inline QI operator-(const QI& a) { return QI(-a.hi, -a.lo); }
inline QI operator-(const QI& a, const QI& b) { return a + (-b); }

inline QI operator*(const QI& a, const QI& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return QI(std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline QI operator*(const Rat& s, const QI& a) { return QI::point(s) * a; }

inline std::optional<QI> intersect(const QI& a, const QI& b) {
  Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo > hi) return std::nullopt;
  return QI(lo, hi);
}

inline QI hull(const QI& a, const QI& b) {
  return QI(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

// Complex rational point.
struct QQ {
  Rat re, im;

  QQ() : re(0), im(0) {}
  QQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool operator==(const QQ& o) const { return re == o.re && im == o.im; }
};

inline QQ operator+(const QQ& a, const QQ& b) { return QQ(a.re + b.re, a.im + b.im); }
inline QQ operator-(const QQ& a, const QQ& b) { return QQ(a.re - b.re, a.im - b.im); }
inline QQ operator*(const QQ& a, const QQ& b) {
  return QQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

// Axis-aligned rectangle in C.
struct Box {
  QI re, im;

  Box() = default;
  Box(QI r, QI i) : re(std::move(r)), im(std::move(i)) {}
  static Box point(const QQ& z) { return Box(QI::point(z.re), QI::point(z.im)); }

  QQ mid() const { return QQ(re.mid(), im.mid()); }
  Rat width() const { return std::max(re.width(), im.width()); }
  bool contains(const QQ& z) const { return re.contains(z.re) && im.contains(z.im); }
  bool contains(const Box& o) const { return re.contains(o.re) && im.contains(o.im); }
  bool contains_interior(const Box& o) const {
    return re.contains_interior(o.re) && im.contains_interior(o.im);
  }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

  bool operator==(const Box& o) const { return re == o.re && im == o.im; }
};

inline Box operator+(const Box& a, const Box& b) { return Box(a.re + b.re, a.im + b.im); }
inline Box operator-(const Box& a, const Box& b) { return Box(a.re - b.re, a.im - b.im); }
inline Box operator*(const Box& a, const Box& b) {
  return Box(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

inline std::optional<Box> intersect(const Box& a, const Box& b) {
  auto r = intersect(a.re, b.re);
  auto i = intersect(a.im, b.im);
  if (!r || !i) return std::nullopt;
  return Box(*r, *i);
}

inline bool disjoint(const Box& a, const Box& b) { return !intersect(a, b).has_value(); }

inline Box inflate(const Box& b, const Rat& eps) {
  return Box(QI(b.re.lo - eps, b.re.hi + eps), QI(b.im.lo - eps, b.im.hi + eps));
}

// --- Polynomial evaluation --------------------------------------------------

// Exact complex Horner evaluation.
inline QQ horner_point(const UPoly& p, const QQ& z) {
  QQ acc;
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * z + QQ(p.coeff(i), Rat(0));
  return acc;
}

// Interval Horner: the result encloses { p(z) : z in box }.  If the result
// excludes zero, the box provably contains no root.
inline Box horner_box(const UPoly& p, const Box& box) {
  Box acc;
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * box + Box::point(QQ(p.coeff(i), Rat(0)));
  return acc;
}

// --- Dyadic rounding ---------------------------------------------------------

// Largest dyadic k/2^bits below or equal to x.
inline Rat dyadic_floor(const Rat& x, int bits) {
  Int scale = Int(1) << bits;
  return Rat(int_floor(x * scale)) / scale;
}

inline Rat dyadic_ceil(const Rat& x, int bits) {
  Int scale = Int(1) << bits;
  return Rat(int_ceil(x * scale)) / scale;
}

// Outward rounding to dyadic endpoints; keeps interval arithmetic sound
// while stopping coordinate bit-length from compounding across iterations.
inline QI round_out(const QI& a, int bits) {
  return QI(dyadic_floor(a.lo, bits), dyadic_ceil(a.hi, bits));
}

inline Box round_out(const Box& b, int bits) {
  return Box(round_out(b.re, bits), round_out(b.im, bits));
}

}  // namespace nearfree
