// Certified algebraic numbers (isolating boxes + minimal polynomials) and
// number-field arithmetic.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "nearfree/algnum.hpp"
#include "nearfree/numfield.hpp"

using namespace nearfree;

namespace {
UPoly up(std::initializer_list<long long> c) {
  return upoly_from_ints(std::vector<long long>(c));
}
}  // namespace

TEST_CASE("root isolation") {
  // t^2 - 2: two real roots in disjoint certified boxes
  const UPoly p = up({-2, 0, 1});
  auto boxes = isolate_roots(p);
  REQUIRE(boxes.size() == 2);
  for (const Box& b : boxes) {
    // each box contains a value whose square is 2, so the squares of the
    // real endpoints must straddle 2
    const Rat lo2 = b.re.lo * b.re.lo, hi2 = b.re.hi * b.re.hi;
    REQUIRE(std::min(lo2, hi2) <= Rat(2));
    REQUIRE(std::max(lo2, hi2) >= Rat(2));
    REQUIRE(b.im.contains_zero());
  }

  // t^2 + 1: conjugate imaginary pair
  auto im = isolate_roots(up({1, 0, 1}));
  REQUIRE(im.size() == 2);
  for (const Box& b : im) {
    REQUIRE(b.re.contains_zero());
    REQUIRE(!b.im.contains_zero());
  }

  // degree matches the number of isolated roots for squarefree inputs
  REQUIRE(isolate_roots(up({-6, 11, -6, 1})).size() == 3);  // (t-1)(t-2)(t-3)
  REQUIRE(isolate_roots(up({1, 0, 0, 0, 1})).size() == 4);  // t^4 + 1
}

TEST_CASE("algebraic number construction and refinement") {
  const AlgNum two = AlgNum::rational(Rat(2));
  REQUIRE(two.is_rational());
  REQUIRE(two.is_real());
  REQUIRE(two.rational_value() == Rat(2));
  REQUIRE(two.degree() == 1);

  auto roots = algnum_roots(up({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  const AlgNum& neg = roots[0];
  const AlgNum& pos = roots[1];
  REQUIRE(algnum_order_lt(neg, pos));
  REQUIRE(!neg.is_rational());
  REQUIRE(neg.is_real());
  REQUIRE(pos.minpoly() == up({-2, 0, 1}));

  // refinement tightens the box without losing the root
  const AlgNum fine = pos.refined(Rat(1, Int(1) << 80));
  REQUIRE(fine.box().width() <= Rat(1, Int(1) << 80));
  REQUIRE(algnum_eq(fine, pos));

  auto [re, imv] = pos.approx();
  REQUIRE(std::abs(re - 1.4142135623730951) < 1e-12);
  REQUIRE(imv == 0.0);
}

TEST_CASE("equality and ordering") {
  // the same number reached through different polynomials: sqrt(2) as a
  // root of t^2 - 2 and as a root of t^4 - 4 (minimal polynomials must
  // coincide after factorization)
  auto a = algnum_roots(up({-2, 0, 1}));
  auto b = algnum_roots(up({-4, 0, 0, 0, 1}));
  // t^4 - 4 = (t^2 - 2)(t^2 + 2): real roots are exactly +-sqrt(2)
  std::vector<AlgNum> breal;
  for (const AlgNum& x : b)
    if (x.is_real()) breal.push_back(x);
  REQUIRE(breal.size() == 2);
  REQUIRE(algnum_eq(a[0], breal[0]));
  REQUIRE(algnum_eq(a[1], breal[1]));
  REQUIRE(!algnum_eq(a[0], a[1]));

  // rational vs algebraic
  REQUIRE(!algnum_eq(AlgNum::rational(Rat(1)), a[1]));
  REQUIRE(algnum_eq(AlgNum::rational(Rat(3, 2)), AlgNum::rational(Rat(3, 2))));

  // ordering is a strict total order on the four roots of (t^2-2)(t^2-3)
  auto four = algnum_roots(up({-2, 0, 1}) * up({-3, 0, 1}));
  REQUIRE(four.size() == 4);
  for (std::size_t i = 0; i + 1 < four.size(); ++i) {
    REQUIRE(algnum_order_lt(four[i], four[i + 1]));
    REQUIRE(!algnum_order_lt(four[i + 1], four[i]));
    REQUIRE(!algnum_eq(four[i], four[i + 1]));
  }
  // the order groups by minimal polynomial first (coefficientwise, so
  // t^2 - 3 precedes t^2 - 2), then by box midpoint within each group:
  // -sqrt(3), sqrt(3), -sqrt(2), sqrt(2)
  REQUIRE(four[0].minpoly() == up({-3, 0, 1}));
  REQUIRE(four[1].minpoly() == up({-3, 0, 1}));
  REQUIRE(four[2].minpoly() == up({-2, 0, 1}));
  REQUIRE(four[3].minpoly() == up({-2, 0, 1}));
  REQUIRE(four[0].approx().first < 0);
  REQUIRE(four[1].approx().first > 0);
  REQUIRE(four[2].approx().first < 0);
  REQUIRE(four[3].approx().first > 0);

  // multiplicities are erased before isolation
  REQUIRE(algnum_roots(up({-2, 0, 1}) * up({-2, 0, 1})).size() == 2);
}

TEST_CASE("number field arithmetic") {
  // K = Q(a) with a^2 = 2
  const NumberField K(up({-2, 0, 1}));
  REQUIRE(K.degree() == 2);
  const NFElem a = NFElem::generator(&K);

  REQUIRE((a * a) == NFElem(2));
  REQUIRE((a + a) * (a + a) == NFElem(8));

  // (1 + a)^-1 = a - 1
  const NFElem one_plus = NFElem(1) + a;
  REQUIRE(one_plus.inverse() == a - NFElem(1));
  REQUIRE(one_plus * one_plus.inverse() == NFElem(1));

  REQUIRE_THROWS_AS(NFElem(0).inverse(), UndefinedInputError);

  // rational elements embed compatibly
  REQUIRE(NFElem(&K, UPoly::constant(Rat(5))) == NFElem(5));
}

TEST_CASE("characteristic and minimal polynomials over a number field") {
  // multiplication by sqrt(2) on the basis {1, a}: [[0,2],[1,0]]
  REQUIRE(nearfree::detail::charpoly({{Rat(0), Rat(2)}, {Rat(1), Rat(0)}}) == up({-2, 0, 1}));
  REQUIRE(nearfree::detail::charpoly({{Rat(3)}}) == up({-3, 1}));

  const NumberField K(up({-2, 0, 1}));
  const NFElem a = NFElem::generator(&K);
  REQUIRE(minpoly_of_element(K, a) == up({-2, 0, 1}));
  // 1 + sqrt(2) has minimal polynomial t^2 - 2t - 1
  REQUIRE(minpoly_of_element(K, NFElem(1) + a) == up({-1, -2, 1}));
  // a rational element has a degree-1 minimal polynomial
  REQUIRE(minpoly_of_element(K, NFElem(7)) == up({-7, 1}));
}

TEST_CASE("polynomial gcd over a number field") {
  const NumberField K(up({-2, 0, 1}));
  const NFElem a = NFElem::generator(&K);

  // t^2 - 2 factors over K; its gcd with (t - a)(t + 3) is t - a
  NFPoly f = lift_to_field(up({-2, 0, 1}), &K);
  NFPoly g = NFPoly::from_coeffs({-a, NFElem(1)}) * NFPoly::from_coeffs({NFElem(3), NFElem(1)});
  NFPoly h = poly_gcd(f, g);
  REQUIRE(h.degree() == 1);
  REQUIRE(h == NFPoly::from_coeffs({-a, NFElem(1)}));
}

TEST_CASE("algebraic numbers from field elements") {
  const NumberField K(up({-2, 0, 1}));
  const NFElem a = NFElem::generator(&K);
  auto roots = algnum_roots(up({-2, 0, 1}));
  const Box positive = roots[1].box();

  // alpha itself
  REQUIRE(algnum_eq(algnum_of_element(K, a, positive), roots[1]));
  // 1 + alpha: root of t^2 - 2t - 1 near 2.414
  const AlgNum s = algnum_of_element(K, NFElem(1) + a, positive);
  REQUIRE(s.minpoly() == up({-1, -2, 1}));
  REQUIRE(std::abs(s.approx().first - 2.414213562373095) < 1e-9);
  // alpha^2 collapses to the rational 2
  REQUIRE(algnum_of_element(K, a * a, positive).rational_value() == Rat(2));
}
