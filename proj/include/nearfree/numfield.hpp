#pragma once
// Number fields K = Q[t]/(m) for monic irreducible m, their elements, and
// minimal polynomials of elements.
//
// NFElem is designed to satisfy the coefficient-field contract of Poly<F>:
// a default-constructed element is a field-less rational zero, and small
// rational constants may likewise exist without a field until they first
// combine with a field-bound element.  This lets Poly<NFElem> use the
// generic algorithms (gcd, squarefree part, division) unchanged.

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nearfree/errors.hpp"
#include "nearfree/poly.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

struct NumberField {
  UPoly modulus;  // monic, irreducible over Q, degree >= 1

  explicit NumberField(const UPoly& m) : modulus(m.monic()) {
    if (m.degree() < 1)
      throw UndefinedInputError("NumberField: modulus must have degree >= 1");
  }

  int degree() const { return modulus.degree(); }
};

class NFElem {
 public:
  NFElem() : K_(nullptr) {}
  NFElem(int v) : K_(nullptr), rep_(UPoly::constant(Rat(v))) {}  // NOLINT: implicit by design
  explicit NFElem(const Rat& v) : K_(nullptr), rep_(UPoly::constant(v)) {}

  NFElem(const NumberField* K, UPoly rep) : K_(K) {
    if (!K) throw InternalError("NFElem: null field with explicit representative");
    rep_ = std::move(rep).divrem(K->modulus).second;
  }

  static NFElem generator(const NumberField* K) { return NFElem(K, upoly_x()); }

  const NumberField* field() const { return K_; }
  const UPoly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.is_constant(); }

  NFElem operator-() const {
    NFElem r = *this;
    r.rep_ = -r.rep_;
    return r;
  }

  NFElem operator+(const NFElem& o) const {
    const NumberField* K = joint_field(o);
    return make(K, rep_ + o.rep_);
  }
  NFElem operator-(const NFElem& o) const {
    const NumberField* K = joint_field(o);
    return make(K, rep_ - o.rep_);
  }
  NFElem operator*(const NFElem& o) const {
    const NumberField* K = joint_field(o);
    UPoly prod = rep_ * o.rep_;
    if (K) prod = prod.divrem(K->modulus).second;
    return make(K, std::move(prod));
  }
  NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }

  NFElem inverse() const {
    if (rep_.is_zero()) throw UndefinedInputError("NFElem: inverse of zero");
    if (!K_ || rep_.is_constant()) {
      NFElem r = *this;
      r.rep_ = UPoly::constant(1 / rep_.coeff(0));
      return r;
    }
    auto [g, u, v] = poly_xgcd(rep_, K_->modulus);
    (void)v;
    if (g.degree() != 0)
      throw InternalError("NFElem: modulus not irreducible (gcd with representative)");
    // u * rep == g (a nonzero constant) mod modulus.
    return make(K_, u * UPoly::constant(1 / g.coeff(0)));
  }

  bool operator==(const NFElem& o) const {
    joint_field(o);  // validates compatibility
    return rep_ == o.rep_;
  }
  bool operator!=(const NFElem& o) const { return !(*this == o); }

 private:
  static NFElem make(const NumberField* K, UPoly rep) {
    NFElem r;
    r.K_ = K;
    r.rep_ = std::move(rep);
    if (K) r.rep_ = r.rep_.divrem(K->modulus).second;
    return r;
  }

  const NumberField* joint_field(const NFElem& o) const {
    if (K_ && o.K_ && K_ != o.K_ && !(K_->modulus == o.K_->modulus))
      throw InternalError("NFElem: arithmetic across distinct number fields");
    return K_ ? K_ : o.K_;
  }

  const NumberField* K_;
  UPoly rep_;  // degree < [K : Q] when a field is attached
};

inline bool coeff_is_zero(const NFElem& x) { return x.is_zero(); }

using NFPoly = Poly<NFElem>;

// Lifts a rational-coefficient polynomial into K[z].
inline NFPoly lift_to_field(const UPoly& p, const NumberField* K) {
  std::vector<NFElem> c;
  c.reserve(p.coeffs().size());
  for (const Rat& x : p.coeffs()) c.push_back(K ? NFElem(K, UPoly::constant(x)) : NFElem(x));
  return NFPoly::from_coeffs(std::move(c));
}

namespace detail {

// Characteristic polynomial of a square rational matrix by the
// Faddeev-LeVerrier recurrence; returned monic, lowest coefficient first.
inline UPoly charpoly(const std::vector<std::vector<Rat>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InternalError("charpoly: non-square matrix");
  auto mul = [&](const std::vector<std::vector<Rat>>& a,
                 const std::vector<std::vector<Rat>>& b) {
    std::vector<std::vector<Rat>> r(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (a[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  };
  auto trace = [&](const std::vector<std::vector<Rat>>& a) {
    Rat t(0);
    for (std::size_t i = 0; i < n; ++i) t += a[i][i];
    return t;
  };
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  std::vector<std::vector<Rat>> a = m;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      // a <- m * (a + c_{n-k+1} I)
      std::vector<std::vector<Rat>> shifted = a;
      for (std::size_t i = 0; i < n; ++i) shifted[i][i] += c[n - k + 1];
      a = mul(m, shifted);
    }
    c[n - k] = -trace(a) / Rat(static_cast<int>(k));
  }
  return UPoly::from_coeffs(std::move(c));
}

}  // namespace detail

// Minimal polynomial over Q of the element h in K, as a canonical primitive
// integer polynomial with positive leading coefficient.  The characteristic
// polynomial of multiplication-by-h is a power of the minimal polynomial,
// so its squarefree part is exactly the (irreducible) minimal polynomial.
inline UPoly minpoly_of_element(const NumberField& K, const NFElem& h) {
  if (h.field() && h.field() != &K && !(h.field()->modulus == K.modulus))
    throw InternalError("minpoly_of_element: element from a different field");
  const int n = K.degree();
  std::vector<std::vector<Rat>> m(static_cast<std::size_t>(n),
                                  std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  NFElem alpha = NFElem::generator(&K);
  NFElem basis(1);
  for (int j = 0; j < n; ++j) {
    NFElem col = (h.field() ? h : NFElem(&K, h.rep())) * basis;
    for (int i = 0; i < n; ++i)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.rep().coeff(i);
    basis = basis * alpha;
  }
  UPoly chi = detail::charpoly(m);
  return canonical_primitive(squarefree_part(chi));
}

}  // namespace nearfree
