#pragma once
// The algebraic side: graded pieces of the Jacobian syzygy module and of
// the Milnor algebra, computed from exact ranks of Macaulay matrices.
//
// For f homogeneous of degree m with partials fx, fy, fz:
//   * macaulay_matrix(f, r) is the matrix of
//       (a, b, c) |-> a fx + b fy + c fz,  S_r^3 -> S_{r+m-1},
//     in the fixed monomial bases;
//   * mdr(f) is the least r with a nonzero kernel (a syzygy); the Koszul
//     relations guarantee r <= m - 1;
//   * milnor_dim(f, k) = dim (S / J_f)_k;
//   * tjurina_global(f) finds the stable value of k |-> milnor_dim(f, k),
//     which for curves with isolated singularities is the total Tjurina
//     number tau(f).
//
// The near-freeness test compares r = mdr(f) and tau:
//   r^2 - r(m-1) + (m-1)^2 == tau + 1   <=>  nearly free, exponents (r, m-r)
//   r^2 - r(m-1) + (m-1)^2 == tau       <=>  free.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "nearfree/errors.hpp"
#include "nearfree/hpoly.hpp"
#include "nearfree/linalg.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

inline std::array<HPoly, 3> jacobian_generators(const HPoly& f) {
  if (f.degree() < 1)
    throw UndefinedInputError("jacobian_generators: degree must be at least 1");
  return {poly_partial(f, 0), poly_partial(f, 1), poly_partial(f, 2)};
}

// Matrix of S_r^3 -> S_{r+m-1}, (a,b,c) |-> a fx + b fy + c fz.
// Rows: monomials of degree r+m-1; columns: three blocks of monomials of
// degree r (block order x-partial, y-partial, z-partial).
inline RatMatrix macaulay_matrix(const HPoly& f, int r) {
  if (r < 0) throw UndefinedInputError("macaulay_matrix: negative source degree");
  const int m = f.degree();
  if (m < 1) throw UndefinedInputError("macaulay_matrix: degree must be at least 1");
  const auto parts = jacobian_generators(f);
  const int target = r + m - 1;
  RatMatrix mat(hdim(target), 3 * hdim(r));
  const std::vector<Mono> src = all_monos(r);
  const std::vector<Mono> gen = all_monos(m - 1);
  for (int v = 0; v < 3; ++v) {
    const HPoly& g = parts[static_cast<std::size_t>(v)];
    for (std::size_t ci = 0; ci < src.size(); ++ci) {
      const std::size_t col = static_cast<std::size_t>(v) * hdim(r) + ci;
      for (const Mono& nu : gen) {
        const Rat& c = g.coeff(nu);
        if (c == 0) continue;
        const Mono rho{src[ci].i + nu.i, src[ci].j + nu.j, src[ci].k + nu.k};
        mat.at(mono_index(rho, target), col) = c;
      }
    }
  }
  return mat;
}

// dim (S / J_f)_k: the full dim S_k below degree m-1, and the corank of
// the Macaulay matrix from source degree k-m+1 onwards.
inline int milnor_dim(const HPoly& f, int k) {
  if (k < 0) throw UndefinedInputError("milnor_dim: negative degree");
  const int m = f.degree();
  if (m < 1) throw UndefinedInputError("milnor_dim: degree must be at least 1");
  if (k < m - 1) return static_cast<int>(hdim(k));
  return static_cast<int>(hdim(k)) -
         static_cast<int>(rank_exact(macaulay_matrix(f, k - m + 1)));
}

// Minimal degree of a Jacobian relation, with a witness syzygy.
struct MdrResult {
  int r = 0;
  std::array<HPoly, 3> witness{HPoly(0), HPoly(0), HPoly(0)};
  bool koszul_hit = false;  // r == m-1: the relation degree of the Koszul syzygies
  bool cone = false;        // r == 0: f has a constant-coefficient relation
};

inline MdrResult mdr(const HPoly& f) {
  const int m = f.degree();
  if (m < 1) throw UndefinedInputError("mdr: degree must be at least 1");
  const auto parts = jacobian_generators(f);
  for (int r = 0; r <= m - 1; ++r) {
    const auto kb = kernel_basis(macaulay_matrix(f, r));
    if (kb.empty()) continue;
    MdrResult res;
    res.r = r;
    res.koszul_hit = (r == m - 1);
    res.cone = (r == 0);
    const std::vector<Mono> src = all_monos(r);
    for (int v = 0; v < 3; ++v) {
      HPoly w(r);
      for (std::size_t ci = 0; ci < src.size(); ++ci)
        w.set_coeff(src[ci], kb.front()[static_cast<std::size_t>(v) * hdim(r) + ci]);
      res.witness[static_cast<std::size_t>(v)] = w;
    }
    HPoly check = res.witness[0] * parts[0] + res.witness[1] * parts[1] +
                  res.witness[2] * parts[2];
    if (!check.is_zero())
      throw InternalError("mdr: kernel vector is not a Jacobian relation");
    return res;
  }
  throw InternalError("mdr: no relation found although Koszul relations exist at m-1");
}

// Stable value of the Milnor algebra dimensions.
struct TjurinaResult {
  int tau = 0;
  int stabilized_at = 0;                  // least sampled k attaining the stable value
  std::vector<std::pair<int, int>> dims;  // (k, dim) trail actually computed
};

inline TjurinaResult tjurina_global(const HPoly& f) {
  const int m = f.degree();
  if (m < 1) throw UndefinedInputError("tjurina_global: degree must be at least 1");
  TjurinaResult res;
  int k = std::max(0, 3 * m - 6);
  int prev = milnor_dim(f, k);
  res.dims.emplace_back(k, prev);
  for (++k; k <= 5 * m; ++k) {
    const int cur = milnor_dim(f, k);
    res.dims.emplace_back(k, cur);
    if (cur == prev) {
      res.tau = cur;
      res.stabilized_at = k - 1;
      return res;
    }
    prev = cur;
  }
  throw StabilizationError(
      "tjurina_global: Milnor algebra dimensions did not stabilise by degree 5m");
}

struct NearFreeVerdict {
  int m = 0;          // degree of f
  int r = 0;          // minimal relation degree
  int d1 = 0, d2 = 0; // candidate exponents (r, m - r)
  int tau = 0;
  Int lhs = 0;        // r^2 - r(m-1) + (m-1)^2
  bool nearly_free = false;
  bool free_curve = false;
  MdrResult mdr_res;
  TjurinaResult tjurina_res;
};

// Arithmetic core of the decision: given the degree m, the minimal relation
// degree r and the total Tjurina number tau, evaluate
//   lhs = r^2 - r(m-1) + (m-1)^2
// and compare against tau + 1 (nearly free) and tau (free).  Exponents are
// (r, m - r) in the nearly free case and (r, m - 1 - r) in the free case.
inline NearFreeVerdict nearly_free_verdict(int m, int r, int tau) {
  NearFreeVerdict v;
  v.m = m;
  v.r = r;
  v.tau = tau;
  const Int R = r, m1 = m - 1;
  v.lhs = R * R - R * m1 + m1 * m1;
  v.nearly_free = (v.lhs == v.tau + 1);
  v.free_curve = (v.lhs == v.tau);
  v.d1 = r;
  v.d2 = v.free_curve ? (m - 1 - r) : (m - r);
  return v;
}

inline NearFreeVerdict nearly_free_verdict(const HPoly& f) {
  MdrResult mr = mdr(f);
  TjurinaResult tr = tjurina_global(f);
  NearFreeVerdict v = nearly_free_verdict(f.degree(), mr.r, tr.tau);
  v.mdr_res = std::move(mr);
  v.tjurina_res = std::move(tr);
  return v;
}

// Human-readable shape of the length-one resolution attached to a nearly
// free curve with exponents (d1, d2); purely documentary.
inline std::string resolution_shape(int m, int d1, int d2) {
  auto s = [](int n) { return std::to_string(n); };
  return "0 -> S(-" + s(d2 + m) + ") -> S(-" + s(d1 + m - 1) + ") (+) S(-" + s(d2 + m - 1) +
         ")^2 -> S^3(-" + s(m - 1) + ") -> S -> M(f) -> 0";
}

}  // namespace nearfree
