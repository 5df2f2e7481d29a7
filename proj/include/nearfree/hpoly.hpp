#pragma once
// Homogeneous polynomials in Q[x, y, z], stored densely per degree.
//
// Monomials of degree n are ordered lexicographically with x > y > z
// (descending), so x^n comes first and z^n last.  The position of
// x^i y^j z^k (i + j + k = n) is
//
//   idx = (n-i)(n-i+1)/2 + (n-i-j),
//
// which the graded modules in the syzygy computations use as their fixed
// basis numbering.

#include <string>
#include <vector>

#include "nearfree/errors.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

struct Mono {
  int i = 0, j = 0, k = 0;  // exponents of x, y, z

  int degree() const { return i + j + k; }
  bool operator==(const Mono& o) const { return i == o.i && j == o.j && k == o.k; }
};

// Number of monomials of degree n in three variables: C(n+2, 2).
inline std::size_t hdim(int n) {
  if (n < 0) return 0;
  return static_cast<std::size_t>((n + 2) * (n + 1) / 2);
}

inline std::size_t mono_index(const Mono& m, int n) {
  if (m.i < 0 || m.j < 0 || m.k < 0 || m.degree() != n)
    throw InternalError("mono_index: exponents do not match the degree");
  const int b = n - m.i;
  return static_cast<std::size_t>(b * (b + 1) / 2 + (b - m.j));
}

inline std::vector<Mono> all_monos(int n) {
  std::vector<Mono> out;
  out.reserve(hdim(n));
  for (int i = n; i >= 0; --i)
    for (int j = n - i; j >= 0; --j) out.push_back(Mono{i, j, n - i - j});
  return out;
}

class HPoly {
 public:
  // Zero polynomial of the given formal degree.
  explicit HPoly(int degree = 0) : deg_(degree), c_(hdim(degree), Rat(0)) {
    if (degree < 0) throw UndefinedInputError("HPoly: negative degree");
  }

  static HPoly monomial(const Mono& m, const Rat& coeff) {
    HPoly p(m.degree());
    p.c_[mono_index(m, p.deg_)] = coeff;
    return p;
  }

  int degree() const { return deg_; }
  std::size_t dim() const { return c_.size(); }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }

  const Rat& coeff(const Mono& m) const { return c_[mono_index(m, deg_)]; }
  const Rat& coeff_at(std::size_t idx) const { return c_.at(idx); }
  void set_coeff(const Mono& m, const Rat& v) { c_[mono_index(m, deg_)] = v; }

  HPoly operator-() const {
    HPoly r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
  }

  HPoly operator+(const HPoly& o) const {
    require_same_degree(o, "+");
    HPoly r = *this;
    for (std::size_t t = 0; t < c_.size(); ++t) r.c_[t] += o.c_[t];
    return r;
  }

  HPoly operator-(const HPoly& o) const { return *this + (-o); }

  HPoly operator*(const Rat& s) const {
    HPoly r = *this;
    for (Rat& x : r.c_) x *= s;
    return r;
  }

  HPoly operator*(const HPoly& o) const {
    HPoly r(deg_ + o.deg_);
    const std::vector<Mono> ma = all_monos(deg_), mb = all_monos(o.deg_);
    for (std::size_t a = 0; a < ma.size(); ++a) {
      if (c_[a] == 0) continue;
      for (std::size_t b = 0; b < mb.size(); ++b) {
        if (o.c_[b] == 0) continue;
        Mono m{ma[a].i + mb[b].i, ma[a].j + mb[b].j, ma[a].k + mb[b].k};
        r.c_[mono_index(m, r.deg_)] += c_[a] * o.c_[b];
      }
    }
    return r;
  }

  bool operator==(const HPoly& o) const { return deg_ == o.deg_ && c_ == o.c_; }
  bool operator!=(const HPoly& o) const { return !(*this == o); }

  // Evaluation over any commutative ring T constructible from Rat.
  template <class T>
  T eval(const T& x, const T& y, const T& z) const {
    T acc = T(Rat(0));
    for (const Mono& m : all_monos(deg_)) {
      const Rat& c = c_[mono_index(m, deg_)];
      if (c == 0) continue;
      T term = T(c);
      for (int t = 0; t < m.i; ++t) term = term * x;
      for (int t = 0; t < m.j; ++t) term = term * y;
      for (int t = 0; t < m.k; ++t) term = term * z;
      acc = acc + term;
    }
    return acc;
  }

 private:
  void require_same_degree(const HPoly& o, const char* op) const {
    if (deg_ != o.deg_)
      throw InternalError(std::string("HPoly: degree mismatch in operator") + op);
  }

  int deg_;
  std::vector<Rat> c_;
};

// Partial derivative with respect to variable 0 (x), 1 (y), or 2 (z).
// The derivative of a degree-0 polynomial is the zero polynomial of
// degree 0.
inline HPoly poly_partial(const HPoly& p, int var) {
  if (var < 0 || var > 2) throw InternalError("poly_partial: variable out of range");
  if (p.degree() == 0) return HPoly(0);
  HPoly r(p.degree() - 1);
  for (const Mono& m : all_monos(p.degree())) {
    const Rat& c = p.coeff(m);
    if (c == 0) continue;
    Mono d = m;
    int e = 0;
    if (var == 0) {
      e = m.i;
      --d.i;
    } else if (var == 1) {
      e = m.j;
      --d.j;
    } else {
      e = m.k;
      --d.k;
    }
    if (e == 0) continue;
    r.set_coeff(d, r.coeff(d) + c * e);
  }
  return r;
}

// "x^2 + y^2 - 16*z^2"-style rendering in the monomial order.
inline std::string hpoly_str(const HPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const Mono& m : all_monos(p.degree())) {
    const Rat& c = p.coeff(m);
    if (c == 0) continue;
    const bool first = out.empty();
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rat a = rabs(c);
    std::string vars;
    const char* names[3] = {"x", "y", "z"};
    const int exps[3] = {m.i, m.j, m.k};
    for (int v = 0; v < 3; ++v) {
      if (exps[v] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[v];
      if (exps[v] > 1) vars += "^" + std::to_string(exps[v]);
    }
    if (vars.empty()) {
      out += rat_str(a);
    } else {
      if (a != 1) out += rat_str(a) + "*";
      out += vars;
    }
  }
  return out;
}

}  // namespace nearfree
