#pragma once
// Dense univariate polynomials over an exact field, plus the Q-specific
// toolbox used everywhere else:
//
//   * Euclidean gcd / extended gcd (any coefficient field),
//   * Sylvester-matrix resultants,
//   * Yun squarefree decomposition,
//   * Sturm chains and exact real-root counting,
//   * rational-root extraction and factorisation up to degree 4,
//   * Cauchy root bounds and a Mignotte-style root-separation lower bound.
//
// Coefficients are stored lowest-degree first with the leading coefficient
// nonzero; the zero polynomial is the empty vector (degree -1).

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nearfree/errors.hpp"
#include "nearfree/linalg.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

inline bool coeff_is_zero(const Rat& x) { return x == 0; }

template <class F>
class Poly {
 public:
  Poly() = default;

  static Poly constant(F c) {
    Poly p;
    if (!coeff_is_zero(c)) p.c_.push_back(std::move(c));
    return p;
  }

  static Poly from_coeffs(std::vector<F> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const std::vector<F>& coeffs() const { return c_; }

  // Coefficient of t^k, with implicit zeros beyond the degree.
  F coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return F();
    return c_[static_cast<std::size_t>(k)];
  }

  const F& lead() const {
    if (is_zero()) throw UndefinedInputError("lead of zero polynomial");
    return c_.back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (F& x : r.c_) x = -x;
    return r;
  }

  Poly operator+(const Poly& o) const {
    std::vector<F> r(std::max(c_.size(), o.c_.size()), F());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return from_coeffs(std::move(r));
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<F> r(c_.size() + o.c_.size() - 1, F());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (coeff_is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        if (!coeff_is_zero(o.c_[j])) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return from_coeffs(std::move(r));
  }

  Poly operator*(const F& s) const {
    if (coeff_is_zero(s)) return Poly();
    Poly r = *this;
    for (F& x : r.c_) x = x * s;
    r.trim();
    return r;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> r(c_.size() - 1, F());
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<int>(i));
    return from_coeffs(std::move(r));
  }

  // Euclidean division; the divisor's leading coefficient must be a unit.
  std::pair<Poly, Poly> divrem(const Poly& b) const {
    if (b.is_zero()) throw UndefinedInputError("division by zero polynomial");
    Poly q, r = *this;
    const int db = b.degree();
    if (degree() < db) return {q, r};
    std::vector<F> qc(static_cast<std::size_t>(degree() - db) + 1, F());
    while (!r.is_zero() && r.degree() >= db) {
      const int k = r.degree() - db;
      F c = r.c_.back() / b.c_.back();
      qc[static_cast<std::size_t>(k)] = c;
      for (int i = 0; i <= db; ++i) {
        std::size_t idx = static_cast<std::size_t>(i + k);
        r.c_[idx] = r.c_[idx] - c * b.c_[static_cast<std::size_t>(i)];
      }
      r.trim();
    }
    return {from_coeffs(std::move(qc)), r};
  }

  Poly monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / c_.back();
    return *this * inv;
  }

  // Horner evaluation in the coefficient field.
  F eval(const F& x) const {
    F acc = F();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

using UPoly = Poly<Rat>;

// ---------------------------------------------------------------------------
// Generic field algorithms.

// Monic gcd by the Euclidean algorithm (remainders re-normalised each step).
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a.divrem(b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

// Extended gcd: returns (g, u, v) with u a + v b = g, g monic (or zero).
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(Poly<F> a, Poly<F> b) {
  Poly<F> u0 = Poly<F>::constant(F(1)), v0;
  Poly<F> u1, v1 = Poly<F>::constant(F(1));
  while (!b.is_zero()) {
    auto [q, r] = a.divrem(b);
    Poly<F> u2 = u0 - q * u1, v2 = v0 - q * v1;
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (a.is_zero()) return {a, u0, v0};
  F inv = F(1) / a.lead();
  return {a * inv, u0 * inv, v0 * inv};
}

// p divided by gcd(p, p'); same roots, all simple.
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
  if (p.is_zero()) throw UndefinedInputError("squarefree_part of zero polynomial");
  if (p.is_constant()) return p;
  Poly<F> g = poly_gcd(p, p.derivative());
  return p.divrem(g).first;
}

// ---------------------------------------------------------------------------
// Q-specific toolbox.

inline UPoly upoly_x() { return UPoly::from_coeffs({Rat(0), Rat(1)}); }

inline UPoly upoly_from_ints(const std::vector<long long>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (long long x : v) c.emplace_back(x);
  return UPoly::from_coeffs(std::move(c));
}

// Resultant as the Sylvester-matrix determinant.  Rows are the shifted
// coefficient vectors of a (deg b copies) above those of b (deg a copies),
// highest coefficient first.  Res(a, b) = lc(a)^{deg b} prod b(alpha_i).
inline Rat upoly_resultant(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw UndefinedInputError("upoly_resultant: both inputs are zero");
  if (a.is_zero() || b.is_zero()) {
    // Res(0, c) with c a nonzero constant is 1 (empty matrix); with deg > 0
    // it vanishes because every value is shared.
    const UPoly& other = a.is_zero() ? b : a;
    return other.degree() == 0 ? Rat(1) : Rat(0);
  }
  const int m = a.degree(), n = b.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  RatMatrix s(size, size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      s.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      s.at(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) = b.coeff(n - j);
  return det_exact(s);
}

// Yun's squarefree decomposition.  Returns monic pairwise-coprime
// squarefree factors with ascending multiplicities; the product of
// factor^multiplicity equals the input up to a rational constant.
inline std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
  if (p.is_zero())
    throw UndefinedInputError("squarefree_decomposition of zero polynomial");
  std::vector<std::pair<UPoly, int>> out;
  if (p.is_constant()) return out;
  UPoly f = p.monic();
  UPoly g = poly_gcd(f, f.derivative());
  UPoly w = f.divrem(g).first;                      // product of distinct roots
  UPoly y = f.derivative().divrem(g).first;
  UPoly z = y - w.derivative();
  int mult = 1;
  while (!w.is_constant()) {
    UPoly h = poly_gcd(w, z);
    if (h.degree() > 0) out.emplace_back(h, mult);
    w = w.divrem(h).first;
    z = z.divrem(h).first - w.derivative();
    ++mult;
  }
  return out;
}

// Primitive integer form with positive leading coefficient.  This is the
// canonical representative used for minimal polynomials and root bounds.
inline UPoly canonical_primitive(const UPoly& p) {
  if (p.is_zero()) return p;
  Int l = 1;
  for (const Rat& c : p.coeffs()) l = ilcm(l, den(c));
  Int g = 0;
  std::vector<Int> w;
  w.reserve(p.coeffs().size());
  for (const Rat& c : p.coeffs()) {
    w.push_back(num(c * l));
    g = igcd(g, w.back());
  }
  if (w.back() < 0) g = -g;
  std::vector<Rat> out;
  out.reserve(w.size());
  for (const Int& x : w) out.emplace_back(Rat(x) / Rat(g));
  return UPoly::from_coeffs(std::move(out));
}

// p(x + c) by Horner composition.
inline UPoly translate(const UPoly& p, const Rat& c) {
  UPoly shift = UPoly::from_coeffs({c, Rat(1)});
  UPoly acc;
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * shift + UPoly::constant(p.coeff(i));
  return acc;
}

// 1 + max |a_i| / |a_n|: every complex root has modulus below this.
inline Rat cauchy_bound(const UPoly& p) {
  if (p.is_zero()) throw UndefinedInputError("cauchy_bound of zero polynomial");
  Rat m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, rabs(p.coeff(i)));
  return 1 + m / rabs(p.lead());
}

// Valid lower bound on the distance between distinct complex roots of a
// squarefree polynomial (Mignotte-style, with the integer discriminant
// bounded below by 1 on the canonical primitive form).
inline Rat root_separation_lb(const UPoly& p_in) {
  UPoly p = canonical_primitive(p_in);
  const int n = p.degree();
  if (n <= 1) return Rat(1);
  Rat norm1(1);
  for (int i = 0; i <= n; ++i) norm1 += rabs(p.coeff(i));
  Int npow = 1;
  const int e = (n + 3) / 2;  // ceil((n+2)/2)
  for (int i = 0; i < e; ++i) npow *= n;
  Rat denom = Rat(npow);
  for (int i = 0; i < n - 1; ++i) denom *= norm1;
  return 1 / denom;
}

// --- Sturm chains ----------------------------------------------------------

inline std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain;
  chain.push_back(p);
  chain.push_back(p.derivative());
  while (!chain.back().is_zero()) {
    const UPoly& a = chain[chain.size() - 2];
    const UPoly& b = chain.back();
    UPoly r = a.divrem(b).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

inline int sign_of(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline int sturm_variations_at(const std::vector<UPoly>& chain, const Rat& x) {
  int var = 0, prev = 0;
  for (const UPoly& q : chain) {
    int s = q.is_zero() ? 0 : sign_of(q.eval(x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

// Number of distinct real roots of p in (a, b].  Endpoints must not be
// roots of the squarefree part.
inline int count_real_roots(const UPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw UndefinedInputError("count_real_roots of zero polynomial");
  if (p.is_constant()) return 0;
  if (a > b) throw UndefinedInputError("count_real_roots: empty interval");
  UPoly sf = squarefree_part(p);
  if (sf.eval(a) == 0 || sf.eval(b) == 0)
    throw InternalError("count_real_roots: endpoint is a root");
  std::vector<UPoly> chain = sturm_chain(sf);
  return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
}

// --- Rational roots --------------------------------------------------------

namespace detail {

// One integer root of a monic squarefree integer polynomial, if any.
// Sturm bisection narrows candidate intervals below width 1, at which point
// the single integer candidate is tested exactly.  Every rational root of a
// monic integer polynomial is an integer, so non-integer bisection points
// are never roots once integer hits are handled eagerly.
inline std::optional<Int> find_one_integer_root(const UPoly& q) {
  if (q.degree() < 1) return std::nullopt;
  Int bound = int_ceil(cauchy_bound(q)) + 1;
  std::vector<UPoly> chain = sturm_chain(q);
  std::vector<std::pair<Rat, Rat>> stk;
  stk.emplace_back(Rat(-bound), Rat(bound));
  while (!stk.empty()) {
    auto [a, b] = stk.back();
    stk.pop_back();
    int roots = sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
    if (roots <= 0) continue;
    if (b - a < 1) {
      Int cand = int_floor(b);
      if (Rat(cand) > a && q.eval(Rat(cand)) == 0) return cand;
      continue;
    }
    Rat mid = (a + b) / 2;
    if (q.eval(mid) == 0) return num(mid);  // monic integer poly => integer root
    stk.emplace_back(a, mid);
    stk.emplace_back(mid, b);
  }
  return std::nullopt;
}

}  // namespace detail

// All rational roots of p (without multiplicity), ascending.  Found by the
// classical monic transform y = lc * x followed by exact integer-root
// bisection, so no divisor enumeration of large coefficients is needed.
inline std::vector<Rat> rational_roots(const UPoly& p_in) {
  if (p_in.is_zero()) throw UndefinedInputError("rational_roots of zero polynomial");
  std::vector<Rat> roots;
  UPoly p = canonical_primitive(squarefree_part(p_in));
  if (p.coeff(0) == 0) {
    roots.emplace_back(0);
    p = p.divrem(upoly_x()).first;
  }
  if (p.degree() < 1) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const int n = p.degree();
  const Rat lc = p.lead();
  // q(y) = lc^{n-1} p(y / lc) is monic with integer coefficients:
  // q_i = p_i * lc^{n-1-i}.
  std::vector<Rat> qc(static_cast<std::size_t>(n) + 1);
  qc[static_cast<std::size_t>(n)] = 1;
  Rat pw(1);
  for (int i = n - 1; i >= 0; --i) {
    qc[static_cast<std::size_t>(i)] = p.coeff(i) * pw;
    pw *= lc;
  }
  UPoly q = UPoly::from_coeffs(std::move(qc));
  while (true) {
    std::optional<Int> z = detail::find_one_integer_root(q);
    if (!z) break;
    roots.push_back(Rat(*z) / lc);
    q = q.divrem(UPoly::from_coeffs({Rat(-*z), Rat(1)})).first;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// --- Factorisation up to degree 4 ------------------------------------------

namespace detail {

inline bool upoly_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

// Splits a monic depressed quartic y^4 + p y^2 + q y + r into two monic
// rational quadratics if possible.  A factorisation
//   (y^2 + s y + u)(y^2 - s y + v)
// exists over Q iff w = s^2 is a rational root of the resolvent cubic
//   w^3 + 2 p w^2 + (p^2 - 4 r) w - q^2
// that is a rational square (w = 0 handles the even split q = 0).
inline std::optional<std::pair<UPoly, UPoly>> split_depressed_quartic(const Rat& p,
                                                                      const Rat& q,
                                                                      const Rat& r) {
  UPoly resolvent = UPoly::from_coeffs({-q * q, p * p - 4 * r, 2 * p, Rat(1)});
  for (const Rat& w : rational_roots(resolvent)) {
    if (w == 0) {
      if (q != 0) continue;
      Rat s0;
      if (!rat_sqrt(p * p - 4 * r, &s0)) continue;
      Rat u = (p - s0) / 2, v = (p + s0) / 2;
      return std::make_pair(UPoly::from_coeffs({u, Rat(0), Rat(1)}),
                            UPoly::from_coeffs({v, Rat(0), Rat(1)}));
    }
    if (w < 0) continue;
    Rat s;
    if (!rat_sqrt(w, &s)) continue;
    Rat u = (p + w - q / s) / 2, v = (p + w + q / s) / 2;
    UPoly f1 = UPoly::from_coeffs({u, s, Rat(1)});
    UPoly f2 = UPoly::from_coeffs({v, -s, Rat(1)});
    if (f1 * f2 == UPoly::from_coeffs({r, q, p, Rat(0), Rat(1)})) return std::make_pair(f1, f2);
  }
  return std::nullopt;
}

}  // namespace detail

// Irreducible monic factors of a squarefree polynomial of degree <= 4,
// sorted by degree then coefficients.  lc(p) * prod(factors) == p.
inline std::vector<UPoly> factor_rational(const UPoly& p_in) {
  if (p_in.is_zero()) throw UndefinedInputError("factor_rational of zero polynomial");
  if (p_in.degree() > 4)
    throw UnsupportedDegreeError("factor_rational: degree " +
                                 std::to_string(p_in.degree()) + " exceeds 4");
  std::vector<UPoly> factors;
  if (p_in.is_constant()) return factors;
  if (poly_gcd(p_in, p_in.derivative()).degree() > 0)
    throw UndefinedInputError("factor_rational: input is not squarefree");

  UPoly p = p_in.monic();
  for (const Rat& r : rational_roots(p)) {
    factors.push_back(UPoly::from_coeffs({-r, Rat(1)}));
    p = p.divrem(factors.back()).first;
  }
  switch (p.degree()) {
    case 0:
      break;
    case 2:
    case 3:
      // No rational roots: quadratics and cubics are then irreducible.
      factors.push_back(p);
      break;
    case 4: {
      const Rat t = p.coeff(3) / 4;
      UPoly dep = translate(p, -t);  // depressed: zero cubic coefficient
      auto split = detail::split_depressed_quartic(dep.coeff(2), dep.coeff(1), dep.coeff(0));
      if (split) {
        factors.push_back(translate(split->first, t));
        factors.push_back(translate(split->second, t));
      } else {
        factors.push_back(p);
      }
      break;
    }
    default:
      throw InternalError("factor_rational: unreachable degree after deflation");
  }
  std::sort(factors.begin(), factors.end(), detail::upoly_less);

  UPoly check = UPoly::constant(p_in.lead());
  for (const UPoly& f : factors) check = check * f;
  if (check != p_in) throw InternalError("factor_rational: product check failed");
  return factors;
}

// --- Display ----------------------------------------------------------------

// "t^2 - 2"-style rendering, highest degree first.
inline std::string upoly_str(const UPoly& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (c == 0) continue;
    const bool first = out.empty();
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rat a = rabs(c);
    if (i == 0) {
      out += rat_str(a);
    } else {
      if (a != 1) out += rat_str(a) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace nearfree
