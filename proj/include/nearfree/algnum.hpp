#pragma once
// Exact algebraic numbers: a canonical integer minimal polynomial plus a
// rational box certified to contain exactly one of its complex roots.
//
// Isolation pipeline (all arithmetic exact):
//   1. subdivide an initial Cauchy-bound square, discarding cells where the
//      exact centre value of p dominates a Taylor-tail bound (a centred
//      exclusion test: free of the wrapping overestimation of rectangular
//      interval evaluation, and with survivor patches that stay bounded
//      even around tight root clusters thanks to the higher-order terms);
//   2. cluster surviving cells by adjacency and run a Krawczyk test on each
//      cluster's (slightly inflated) bounding box -- success proves the box
//      holds exactly one root;
//   3. accept once every cluster certifies, the cluster count equals the
//      degree, and the certified boxes are pairwise disjoint.
//
// Boxes are then contracted below a quarter of a proven root-separation
// bound, which turns equality of algebraic numbers into a box-intersection
// test whenever the minimal polynomials match.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearfree/errors.hpp"
#include "nearfree/interval.hpp"
#include "nearfree/numfield.hpp"
#include "nearfree/poly.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

namespace detail {

struct KrawczykStep {
  Box k;        // Krawczyk image: contains every root of p in the input box
  Rat opnorm;   // bound on the contraction factor ||I - Y J(X)||_inf
  bool usable;  // false when the midpoint derivative is zero
};

// One Krawczyk evaluation for p on box X, treating p as the real 2x2 system
// given by its real and imaginary parts.  The Jacobian has Cauchy-Riemann
// structure, so complex interval arithmetic computes it exactly:
//   K(X) = c - Y p(c) + (1 - Y p'(X)) (X - c),   Y = 1 / p'(c).
inline KrawczykStep krawczyk(const UPoly& p, const UPoly& dp, const Box& x) {
  const QQ c = x.mid();
  const QQ pc = horner_point(p, c);
  const QQ dpc = horner_point(dp, c);
  const Rat denom = dpc.re * dpc.re + dpc.im * dpc.im;
  if (denom == 0) return {Box(), Rat(0), false};
  const QQ y(dpc.re / denom, -dpc.im / denom);
  const Box e = Box::point(QQ(Rat(1), Rat(0))) - Box::point(y) * horner_box(dp, x);
  const Rat opnorm = e.re.mag() + e.im.mag();
  const Box k = Box::point(c - y * pc) + e * (x - Box::point(c));
  return {k, opnorm, true};
}

// Coefficients of p(c + u) in ascending powers of u, by iterated synthetic
// division; exact complex-rational arithmetic.
inline std::vector<QQ> taylor_shift(const UPoly& p, const QQ& c) {
  const int n = p.degree();
  std::vector<QQ> t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) t[static_cast<std::size_t>(i)] = QQ(p.coeff(i), Rat(0));
  for (int k = 0; k < n; ++k)
    for (int j = n - 1; j >= k; --j)
      t[static_cast<std::size_t>(j)] =
          t[static_cast<std::size_t>(j)] + c * t[static_cast<std::size_t>(j + 1)];
  return t;
}

// Proves a cell free of roots when the centre value dominates the Taylor
// tail: for z in the cell, |z - c| <= rho, so
//   |p(z)| >= |p(c)| - sum_{k>=1} |t_k| rho^k,
// and the right side is bounded below through exact rational surrogates
// (|w| >= max(|Re w|, |Im w|) for the head, |w| <= |Re w| + |Im w| for the
// tail terms).  Rectangular interval evaluation is deliberately avoided
// here: its wrapping overestimation can keep whole curves of cells alive
// at any fixed subdivision depth near close root pairs.
inline bool cell_excludes_root(const UPoly& p, const Box& cell) {
  const QQ c = cell.mid();
  const std::vector<QQ> t = taylor_shift(p, c);
  const Rat rho = cell.re.width() / 2 + cell.im.width() / 2;
  Rat tail(0), rpow(1);
  for (std::size_t k = 1; k < t.size(); ++k) {
    rpow *= rho;
    tail += (rabs(t[k].re) + rabs(t[k].im)) * rpow;
  }
  return std::max(rabs(t[0].re), rabs(t[0].im)) > tail;
}

// Attempts to certify that `x` contains exactly one root of p.  On success
// returns a tightened box (still containing every root of p inside x).
inline std::optional<Box> certify_unique_root(const UPoly& p, const UPoly& dp, const Box& x) {
  KrawczykStep s = krawczyk(p, dp, x);
  if (!s.usable) return std::nullopt;
  if (!x.contains_interior(s.k)) return std::nullopt;
  if (s.opnorm > Rat(1, 2)) return std::nullopt;
  auto tight = intersect(s.k, x);
  if (!tight) throw InternalError("certify_unique_root: Krawczyk image escaped the box");
  return *tight;
}

}  // namespace detail

// Contracts a box certified to contain exactly one root of the squarefree
// polynomial p until its width is at most `target`.  Endpoints are kept
// dyadic slightly below the target scale so coordinate sizes stay bounded.
inline Box refine_box(const UPoly& p, Box x, const Rat& target) {
  if (target <= 0) throw UndefinedInputError("refine_box: target must be positive");
  if (p.degree() == 1) return Box::point(QQ(-p.coeff(0) / p.coeff(1), Rat(0)));
  const UPoly dp = p.derivative();
  const long bits = std::max<long>(8, -floor_log2(target) + 32);
  for (int iter = 0; iter < 300; ++iter) {
    if (x.width() <= target) return x;
    detail::KrawczykStep s = detail::krawczyk(p, dp, x);
    if (!s.usable)
      throw RefinementError("refine_box: derivative vanished at box midpoint");
    auto tight = intersect(s.k, x);
    if (!tight)
      throw InternalError("refine_box: contraction lost the root");
    x = round_out(*tight, bits);
  }
  throw RefinementError("refine_box: contraction did not reach target width");
}

// Pairwise-disjoint certified boxes, one around each distinct complex root
// of (the squarefree part of) p.  Deterministic: no randomness, fixed
// subdivision order.
inline std::vector<Box> isolate_roots(const UPoly& p_in) {
  if (p_in.is_zero()) throw UndefinedInputError("isolate_roots of zero polynomial");
  const UPoly p = canonical_primitive(squarefree_part(p_in));
  if (p.degree() < 1)
    throw UndefinedInputError("isolate_roots: constant polynomial has no roots");
  if (p.degree() == 1)
    return {Box::point(QQ(-p.coeff(0) / p.coeff(1), Rat(0)))};

  const UPoly dp = p.derivative();
  const std::size_t n = static_cast<std::size_t>(p.degree());
  const Rat b = Rat(int_ceil(cauchy_bound(p)) + 1);
  std::vector<Box> cells{Box(QI(-b, b), QI(-b, b))};

  for (int round = 0; round < 96; ++round) {
    // Quadrisect every remaining cell, keeping only those whose interval
    // image still contains zero.
    std::vector<Box> next;
    for (const Box& cell : cells) {
      const Rat rm = cell.re.mid(), im = cell.im.mid();
      const Box quads[4] = {
          Box(QI(cell.re.lo, rm), QI(cell.im.lo, im)),
          Box(QI(rm, cell.re.hi), QI(cell.im.lo, im)),
          Box(QI(cell.re.lo, rm), QI(im, cell.im.hi)),
          Box(QI(rm, cell.re.hi), QI(im, cell.im.hi)),
      };
      for (const Box& q : quads)
        if (!detail::cell_excludes_root(p, q)) next.push_back(q);
    }
    cells = std::move(next);
    if (cells.empty())
      throw InternalError("isolate_roots: every cell was excluded");

    // Union-find clustering of touching cells (closed boxes sharing any
    // point, so roots sitting exactly on subdivision lines stay whole).
    std::vector<std::size_t> parent(cells.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j)
        if (!disjoint(cells[i], cells[j])) parent[find(i)] = find(j);
    std::vector<std::size_t> cluster_of(cells.size());
    std::vector<std::size_t> roots_seen;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::size_t r = find(i);
      auto it = std::find(roots_seen.begin(), roots_seen.end(), r);
      if (it == roots_seen.end()) {
        roots_seen.push_back(r);
        cluster_of[i] = roots_seen.size() - 1;
      } else {
        cluster_of[i] = static_cast<std::size_t>(it - roots_seen.begin());
      }
    }
    if (roots_seen.size() != n) continue;

    std::vector<Box> hulls(roots_seen.size());
    std::vector<bool> started(roots_seen.size(), false);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::size_t c = cluster_of[i];
      hulls[c] = started[c] ? Box(hull(hulls[c].re, cells[i].re), hull(hulls[c].im, cells[i].im))
                            : cells[i];
      started[c] = true;
    }

    std::vector<Box> certified;
    certified.reserve(n);
    bool ok = true;
    for (const Box& h : hulls) {
      // Inflation keeps roots lying exactly on the hull boundary interior.
      // The pad scales with the hull (falling back to the current cell size
      // for degenerate hulls): an absolute floor could swallow a nearby
      // root when the separation is tighter than the floor.
      const Rat pad = h.width() > 0 ? h.width() : cells.front().re.width();
      Box target = inflate(h, pad / 8);
      auto c = detail::certify_unique_root(p, dp, target);
      if (!c) {
        ok = false;
        break;
      }
      certified.push_back(*c);
    }
    if (!ok) continue;
    for (std::size_t i = 0; ok && i < certified.size(); ++i)
      for (std::size_t j = i + 1; ok && j < certified.size(); ++j)
        if (!disjoint(certified[i], certified[j])) ok = false;
    if (!ok) continue;
    return certified;
  }
  throw RefinementError("isolate_roots: subdivision depth limit reached");
}

// ---------------------------------------------------------------------------

class AlgNum {
 public:
  // Rational zero.
  AlgNum() : minpoly_(canonical_primitive(upoly_x())), box_(Box::point(QQ())) {}

  static AlgNum rational(const Rat& r) {
    AlgNum a;
    a.minpoly_ = canonical_primitive(UPoly::from_coeffs({-r, Rat(1)}));
    a.box_ = Box::point(QQ(r, Rat(0)));
    return a;
  }

  // `minpoly` must be irreducible over Q; `box` must contain exactly one of
  // its roots and admit Krawczyk contraction.  The box is normalised below
  // a quarter of the root-separation bound at construction.
  AlgNum(const UPoly& minpoly, const Box& box)
      : minpoly_(canonical_primitive(minpoly)), box_(box) {
    if (minpoly_.degree() < 1)
      throw UndefinedInputError("AlgNum: minimal polynomial must be nonconstant");
    if (minpoly_.degree() == 1) {
      const Rat r = -minpoly_.coeff(0) / minpoly_.coeff(1);
      if (!box_.contains(QQ(r, Rat(0))))
        throw InternalError("AlgNum: box does not contain the rational root");
      box_ = Box::point(QQ(r, Rat(0)));
      return;
    }
    const UPoly dp = minpoly_.derivative();
    if (!detail::certify_unique_root(minpoly_, dp, box_)) {
      // A root close to the boundary can block certification even though
      // the box isolates it; a slight inflation restores an interior gap
      // without admitting a second root (the pad is proportional to the
      // box, which is kept far below the separation bound).
      Box wider = inflate(box_, box_.width() > 0 ? box_.width() / 8 : Rat(1, 1024));
      if (!detail::certify_unique_root(minpoly_, dp, wider))
        throw InternalError("AlgNum: box failed uniqueness certification");
      box_ = wider;
    }
    box_ = refine_box(minpoly_, box_, root_separation_lb(minpoly_) / 4);
  }

  const UPoly& minpoly() const { return minpoly_; }
  const Box& box() const { return box_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return degree() == 1; }

  Rat rational_value() const {
    if (!is_rational()) throw UndefinedInputError("AlgNum: not rational");
    return -minpoly_.coeff(0) / minpoly_.coeff(1);
  }

  bool is_real() const {
    if (is_rational()) return true;
    if (!box_.im.contains_zero()) return false;
    // The box holds exactly one root; a real root of the minimal polynomial
    // inside the real extent is necessarily that root.  Irreducible minimal
    // polynomials of degree >= 2 have no rational roots, so the rational
    // endpoints are safe for Sturm counting.
    return count_real_roots(minpoly_, box_.re.lo, box_.re.hi) >= 1;
  }

  // A copy with box width at most `target`.
  AlgNum refined(const Rat& target) const {
    AlgNum a = *this;
    if (!is_rational() && a.box_.width() > target)
      a.box_ = refine_box(a.minpoly_, a.box_, target);
    return a;
  }

  // Double-precision enclosure midpoint, refined to ~2^-bits first.
  std::pair<double, double> approx(int bits = 60) const {
    Box b = is_rational() ? box_ : refine_box(minpoly_, box_, Rat(1) / (Int(1) << bits));
    QQ m = b.mid();
    return {to_double(m.re), to_double(m.im)};
  }

 private:
  UPoly minpoly_;
  Box box_;
};

// Equality of algebraic numbers.  Both boxes are kept below sep/4, so for
// matching minimal polynomials intersection is equivalent to equality:
// touching boxes confine two roots within less than the separation bound.
inline bool algnum_eq(const AlgNum& a, const AlgNum& b) {
  if (!(a.minpoly() == b.minpoly())) return false;
  if (a.is_rational()) return a.rational_value() == b.rational_value();
  return !disjoint(a.box(), b.box());
}

// Deterministic strict ordering for reports: by degree, then minimal
// polynomial coefficients, then box midpoint.  Distinct numbers with the
// same minimal polynomial have disjoint boxes, so midpoints discriminate.
inline bool algnum_order_lt(const AlgNum& a, const AlgNum& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.minpoly().coeff(i) != b.minpoly().coeff(i))
      return a.minpoly().coeff(i) < b.minpoly().coeff(i);
  const QQ ma = a.box().mid(), mb = b.box().mid();
  if (ma.re != mb.re) return ma.re < mb.re;
  return ma.im < mb.im;
}

// All distinct complex roots of p (degree <= 4 after squarefree reduction),
// in deterministic order.
inline std::vector<AlgNum> algnum_roots(const UPoly& p) {
  if (p.is_zero()) throw UndefinedInputError("algnum_roots of zero polynomial");
  std::vector<AlgNum> out;
  const UPoly sf = squarefree_part(p);
  if (sf.degree() < 1) return out;
  for (const UPoly& f : factor_rational(sf)) {
    if (f.degree() == 1) {
      out.push_back(AlgNum::rational(-f.coeff(0) / f.coeff(1)));
      continue;
    }
    const UPoly fc = canonical_primitive(f);
    for (const Box& b : isolate_roots(fc)) out.emplace_back(fc, b);
  }
  std::sort(out.begin(), out.end(), algnum_order_lt);
  return out;
}

// The algebraic number h(alpha), where alpha is the root of K's modulus
// isolated by `alpha_box` (a certified box).  The minimal polynomial comes
// from the multiplication matrix; the box is the interval image of a
// sufficiently refined alpha_box.
inline AlgNum algnum_of_element(const NumberField& K, const NFElem& h, Box alpha_box) {
  if (h.rep().is_constant()) return AlgNum::rational(h.rep().coeff(0));
  const UPoly mb = minpoly_of_element(K, h);
  if (mb.degree() == 1) return AlgNum::rational(-mb.coeff(0) / mb.coeff(1));
  const UPoly mod = canonical_primitive(K.modulus);
  const Rat target = root_separation_lb(mb) / 4;
  Box img = horner_box(h.rep(), alpha_box);
  for (int iter = 0; iter < 120 && img.width() > target; ++iter) {
    Rat next = alpha_box.width() / 16;
    if (next == 0) break;  // point box: image is exact
    alpha_box = refine_box(mod, alpha_box, next);
    img = horner_box(h.rep(), alpha_box);
  }
  if (img.width() > target)
    throw RefinementError("algnum_of_element: image box did not reach separation target");
  return AlgNum(mb, img);
}

}  // namespace nearfree
