// Jacobian syzygies and Milnor algebra dimensions through exact Macaulay
// matrix ranks: minimal relation degree, global Tjurina number, and the
// near-freeness decision.

#include <catch2/catch_amalgamated.hpp>

#include "nearfree/arrangement.hpp"
#include "nearfree/jacobian.hpp"

using namespace nearfree;

namespace {

HPoly mono3(int i, int j, int k, int c = 1) { return HPoly::monomial(Mono{i, j, k}, Rat(c)); }

const HPoly xyz = mono3(1, 1, 1);

HPoly fermat(int d) { return mono3(d, 0, 0) + mono3(0, d, 0) + mono3(0, 0, d); }

Arrangement conic_one_secant() {
  Arrangement a;
  a.lines.push_back(LineSpec{Rat(-1), Rat(1), Rat(4)});
  a.conics.push_back(ConicSpec{Rat(1), Rat(1), Rat(-16), Rat(0), Rat(0), Rat(0)});
  return a;
}

Arrangement conic_tangent_secant() {
  Arrangement a;
  a.lines.push_back(LineSpec{Rat(0), Rat(1), Rat(-4)});
  a.lines.push_back(LineSpec{Rat(1), Rat(-1), Rat(0)});
  a.conics.push_back(ConicSpec{Rat(1), Rat(1), Rat(-16), Rat(0), Rat(0), Rat(0)});
  return a;
}

}  // namespace

TEST_CASE("Jacobian generators") {
  const auto g = jacobian_generators(xyz);
  REQUIRE(g[0] == mono3(0, 1, 1));
  REQUIRE(g[1] == mono3(1, 0, 1));
  REQUIRE(g[2] == mono3(1, 1, 0));

  const auto h = jacobian_generators(mono3(3, 0, 0));
  REQUIRE(h[0] == mono3(2, 0, 0, 3));
  REQUIRE(h[1].is_zero());
  REQUIRE(h[2].is_zero());

  // Euler identity: x f_x + y f_y + z f_z = m f
  const HPoly f = defining_polynomial(conic_one_secant());
  const auto p = jacobian_generators(f);
  const HPoly euler =
      mono3(1, 0, 0) * p[0] + mono3(0, 1, 0) * p[1] + mono3(0, 0, 1) * p[2];
  HPoly mf(f.degree());
  for (const Mono& mo : all_monos(f.degree())) mf.set_coeff(mo, Rat(f.degree()) * f.coeff(mo));
  REQUIRE(euler == mf);
}

TEST_CASE("Macaulay matrix shapes and entries") {
  const HPoly f3 = defining_polynomial(conic_one_secant());
  const RatMatrix m1 = macaulay_matrix(f3, 1);
  REQUIRE(m1.rows() == 10);
  REQUIRE(m1.cols() == 9);

  // d lines and k conics of total degree 7: source degree 3 gives 55 x 30
  const HPoly f7 = fermat(7);
  const RatMatrix m3 = macaulay_matrix(f7, 3);
  REQUIRE(m3.rows() == 55);
  REQUIRE(m3.cols() == 30);

  // entry convention: columns are (a, b, c) blocks; for f = xyz at source
  // degree 0 the three columns carry yz, xz, xy
  const RatMatrix m0 = macaulay_matrix(xyz, 0);
  REQUIRE(m0.rows() == 6);
  REQUIRE(m0.cols() == 3);
  REQUIRE(m0.at(mono_index(Mono{0, 1, 1}, 2), 0) == Rat(1));
  REQUIRE(m0.at(mono_index(Mono{1, 0, 1}, 2), 1) == Rat(1));
  REQUIRE(m0.at(mono_index(Mono{1, 1, 0}, 2), 2) == Rat(1));

  // kernel of the degree-1 block for xyz is two-dimensional
  REQUIRE(kernel_basis(macaulay_matrix(xyz, 1)).size() == 2);
}

TEST_CASE("kernel dimensions are nondecreasing in the source degree") {
  const HPoly f = defining_polynomial(conic_one_secant());
  std::size_t prev = 0;
  for (int r = 0; r <= 4; ++r) {
    const RatMatrix m = macaulay_matrix(f, r);
    const std::size_t dim = m.cols() - rank_exact(m);
    REQUIRE(dim >= prev);
    prev = dim;
  }
}

TEST_CASE("Milnor algebra dimensions") {
  // smooth conic: the Jacobian ideal is the maximal ideal, so the algebra
  // vanishes in degree 4
  REQUIRE(milnor_dim(fermat(2), 4) == 0);
  // degree 0 piece is always one-dimensional (constants)
  REQUIRE(milnor_dim(xyz, 0) == 1);
  REQUIRE(milnor_dim(fermat(4), 0) == 1);
  // below degree m-1 no reduction happens
  REQUIRE(milnor_dim(fermat(4), 2) == static_cast<int>(hdim(2)));

  REQUIRE_THROWS_AS(milnor_dim(xyz, -1), UndefinedInputError);
}

TEST_CASE("minimal degree of a relation") {
  // coordinate triangle: r = 1, and the returned witness really is a relation
  const MdrResult t = mdr(xyz);
  REQUIRE(t.r == 1);
  REQUIRE(!t.koszul_hit);
  REQUIRE(!t.cone);
  const auto g = jacobian_generators(xyz);
  REQUIRE((t.witness[0] * g[0] + t.witness[1] * g[1] + t.witness[2] * g[2]).is_zero());

  // conic plus secant line: r = 1
  REQUIRE(mdr(defining_polynomial(conic_one_secant())).r == 1);

  // smooth cubic: no relation below the Koszul degree
  const MdrResult sc = mdr(fermat(3));
  REQUIRE(sc.r == 2);
  REQUIRE(sc.koszul_hit);

  // smooth quartic
  const MdrResult sq = mdr(fermat(4));
  REQUIRE(sq.r == 3);
  REQUIRE(sq.koszul_hit);

  // a cone has a constant relation
  const MdrResult cone = mdr(mono3(3, 0, 0));
  REQUIRE(cone.r == 0);
  REQUIRE(cone.cone);
}

TEST_CASE("global Tjurina numbers") {
  const TjurinaResult f3 = tjurina_global(defining_polynomial(conic_one_secant()));
  REQUIRE(f3.tau == 2);
  REQUIRE(f3.dims.front().first == 3);  // sampling starts at 3m - 6

  REQUIRE(tjurina_global(xyz).tau == 3);

  // smooth cubic: tau = 0, with the sampled trail pinned
  const TjurinaResult sc = tjurina_global(fermat(3));
  REQUIRE(sc.tau == 0);
  REQUIRE(sc.stabilized_at == 4);
  REQUIRE(sc.dims ==
          std::vector<std::pair<int, int>>{{3, 1}, {4, 0}, {5, 0}});

  // tangent + secant arrangement of degree 4: three nodes and a tacnode
  REQUIRE(tjurina_global(defining_polynomial(conic_tangent_secant())).tau == 6);

  // non-reduced input never stabilises
  REQUIRE_THROWS_AS(tjurina_global(mono3(3, 0, 0)), StabilizationError);
}

TEST_CASE("near-freeness decision from (m, r, tau)") {
  const NearFreeVerdict a = nearly_free_verdict(3, 1, 2);
  REQUIRE(a.nearly_free);
  REQUIRE(!a.free_curve);
  REQUIRE(a.d1 == 1);
  REQUIRE(a.d2 == 2);
  REQUIRE(a.lhs == 3);

  const NearFreeVerdict b = nearly_free_verdict(7, 3, 26);
  REQUIRE(b.nearly_free);
  REQUIRE(b.d1 == 3);
  REQUIRE(b.d2 == 4);

  // lhs == tau is freeness; exponents then sum to m - 1
  const NearFreeVerdict c = nearly_free_verdict(3, 1, 3);
  REQUIRE(!c.nearly_free);
  REQUIRE(c.free_curve);
  REQUIRE(c.d1 == 1);
  REQUIRE(c.d2 == 1);

  const NearFreeVerdict d = nearly_free_verdict(4, 1, 3);
  REQUIRE(!d.nearly_free);
  REQUIRE(!d.free_curve);
}

TEST_CASE("near-freeness decision from a polynomial") {
  const NearFreeVerdict v = nearly_free_verdict(defining_polynomial(conic_one_secant()));
  REQUIRE(v.m == 3);
  REQUIRE(v.r == 1);
  REQUIRE(v.tau == 2);
  REQUIRE(v.nearly_free);
  REQUIRE((v.d1 == 1 && v.d2 == 2));

  const NearFreeVerdict w = nearly_free_verdict(xyz);
  REQUIRE(w.free_curve);
  REQUIRE(!w.nearly_free);
  REQUIRE(w.tau == 3);
  REQUIRE((w.d1 == 1 && w.d2 == 1));

  const NearFreeVerdict u = nearly_free_verdict(defining_polynomial(conic_tangent_secant()));
  REQUIRE(u.m == 4);
  REQUIRE(u.r == 2);
  REQUIRE(u.tau == 6);
  REQUIRE(u.nearly_free);
  REQUIRE((u.d1 == 2 && u.d2 == 2));
}

TEST_CASE("the two defining identities agree on the admissible grid") {
  // r^2 - r(m-1) + (m-1)^2 - 1 equals d1^2 + d2^2 + d1 d2 - d1 - 2 d2
  // whenever d1 = r, d2 = m - r
  for (int m = 3; m <= 12; ++m)
    for (int d1 = 0; d1 <= m / 2; ++d1) {
      const int d2 = m - d1;
      const long long lhs =
          1LL * d1 * d1 - 1LL * d1 * (m - 1) + 1LL * (m - 1) * (m - 1) - 1;
      const long long rhs = 1LL * d1 * d1 + 1LL * d2 * d2 + 1LL * d1 * d2 - d1 - 2LL * d2;
      REQUIRE(lhs == rhs);
    }
}

TEST_CASE("resolution shape rendering") {
  REQUIRE(resolution_shape(3, 1, 2) ==
          "0 -> S(-5) -> S(-3) (+) S(-4)^2 -> S^3(-2) -> S -> M(f) -> 0");
}
