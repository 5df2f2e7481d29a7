#pragma once
// Singular points of a conic-line arrangement, computed exactly.
//
// Every pairwise intersection is located with its local intersection
// multiplicity, over the complex numbers:
//   * line-line:  cross product, multiplicity 1;
//   * line-conic: restrict the conic to a rational parametrisation of the
//     line, a binary quadratic whose roots are classified exactly;
//   * conic-conic: apply an invertible integral shear so the projection
//     from (0:0:1) is generic, take the z-resultant (degree exactly 4),
//     and certify that each fiber above a root carries a single geometric
//     point, so resultant multiplicities equal intersection multiplicities.
//
// Records are then grouped by exact point equality and classified:
// two smooth branches meeting transversally (node), two branches with
// contact of order two (tacnode), or three pairwise-transversal branches
// (ordinary triple point).  Anything else raises
// UnsupportedSingularityError.  Internal audits check Bezout counts per
// pair and globally.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nearfree/algnum.hpp"
#include "nearfree/arrangement.hpp"
#include "nearfree/errors.hpp"
#include "nearfree/interval.hpp"
#include "nearfree/linalg.hpp"
#include "nearfree/numfield.hpp"
#include "nearfree/poly.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

// Projective point with coordinates normalised so the first nonzero
// coordinate (in x, y, z order) equals 1; equality is then coordinatewise.
struct ProjPoint {
  std::array<AlgNum, 3> c;
};

inline bool point_eq(const ProjPoint& p, const ProjPoint& q) {
  for (int i = 0; i < 3; ++i)
    if (!algnum_eq(p.c[i], q.c[i])) return false;
  return true;
}

inline bool point_lt(const ProjPoint& p, const ProjPoint& q) {
  for (int i = 0; i < 3; ++i) {
    if (!algnum_eq(p.c[i], q.c[i])) return algnum_order_lt(p.c[i], q.c[i]);
  }
  return false;
}

inline bool point_is_real(const ProjPoint& p) {
  for (int i = 0; i < 3; ++i)
    if (!p.c[i].is_real()) return false;
  return true;
}

inline std::string algnum_str(const AlgNum& a) {
  if (a.is_rational()) return rat_str(a.rational_value());
  auto [re, im] = a.approx(52);
  char buf[64];
  if (a.is_real()) {
    std::snprintf(buf, sizeof(buf), "~%.6g", re);
  } else {
    std::snprintf(buf, sizeof(buf), "~%.6g%+.6gi", re, im);
  }
  return std::string(buf) + " (root of " + upoly_str(a.minpoly()) + ")";
}

inline std::string proj_point_str(const ProjPoint& p) {
  return "(" + algnum_str(p.c[0]) + " : " + algnum_str(p.c[1]) + " : " + algnum_str(p.c[2]) +
         ")";
}

// One pairwise intersection: components comp_a < comp_b meet at `point`
// with local intersection multiplicity `mult`.
struct IntersectionRecord {
  std::size_t comp_a, comp_b;
  ProjPoint point;
  int mult;
};

enum class SingType { node, tacnode, triple };

inline const char* sing_type_str(SingType t) {
  switch (t) {
    case SingType::node:
      return "node";
    case SingType::tacnode:
      return "tacnode";
    case SingType::triple:
      return "ordinary triple point";
  }
  return "unknown";
}

struct SingPoint {
  ProjPoint point;
  SingType type;
  std::vector<std::size_t> components;  // sorted global component indices
};

// d lines, k conics; n2 nodes, t tacnodes, n3 ordinary triple points
// (all counted over the complex numbers).
struct WeakCombinatorics {
  int d = 0, k = 0;
  int n2 = 0, t = 0, n3 = 0;

  bool operator==(const WeakCombinatorics& o) const {
    return d == o.d && k == o.k && n2 == o.n2 && t == o.t && n3 == o.n3;
  }
};

// Total Tjurina number of the arrangement from its singularity counts:
// a node contributes 1, a tacnode 3, an ordinary triple point 4.
inline int tjurina_from_wc(const WeakCombinatorics& wc) {
  return wc.n2 + 3 * wc.t + 4 * wc.n3;
}

// Incidence tally: for an arrangement of k smooth conics and d lines with
// only nodes, tacnodes and ordinary triple points, counting pairwise
// component intersections with Bezout multiplicities gives
//   n2 + 2t + 3n3 = C(m, 2) - k,   m = 2k + d.
inline bool check_count(const WeakCombinatorics& wc) {
  const long long m = 2LL * wc.k + wc.d;
  return 1LL * wc.n2 + 2LL * wc.t + 3LL * wc.n3 == m * (m - 1) / 2 - wc.k;
}

// ---------------------------------------------------------------------------
// Construction of normalised points from field data.

namespace detail {

// Builds a normalised projective point whose coordinates live in the number
// field K (alpha isolated by alpha_box), or in Q when K is null.
inline ProjPoint make_proj_point(const NumberField* K, const Box& alpha_box,
                                 std::array<NFElem, 3> c) {
  int first = -1;
  for (int i = 0; i < 3 && first < 0; ++i)
    if (!c[i].is_zero()) first = i;
  if (first < 0) throw InternalError("make_proj_point: zero coordinate vector");
  const NFElem inv = c[static_cast<std::size_t>(first)].inverse();
  ProjPoint p;
  for (int i = 0; i < 3; ++i) {
    const NFElem v = c[static_cast<std::size_t>(i)] * inv;
    if (!K || v.rep().is_constant()) {
      p.c[static_cast<std::size_t>(i)] = AlgNum::rational(v.rep().coeff(0));
    } else {
      p.c[static_cast<std::size_t>(i)] = algnum_of_element(*K, v, alpha_box);
    }
  }
  return p;
}

inline ProjPoint make_proj_point_rat(const std::array<Rat, 3>& v) {
  std::array<NFElem, 3> c{NFElem(v[0]), NFElem(v[1]), NFElem(v[2])};
  return make_proj_point(nullptr, Box(), c);
}

inline Rat conic_eval3(const ConicSpec& q, const Rat& x, const Rat& y, const Rat& z) {
  return q.A * x * x + q.B * y * y + q.C * z * z + q.D * x * y + q.E * x * z + q.F * y * z;
}

inline Rat conic_eval(const ConicSpec& q, const std::vector<Rat>& v) {
  return conic_eval3(q, v[0], v[1], v[2]);
}

// Polarisation of the conic's quadratic form.
inline Rat conic_bilinear(const ConicSpec& q, const std::vector<Rat>& u,
                          const std::vector<Rat>& v) {
  std::vector<Rat> s{u[0] + v[0], u[1] + v[1], u[2] + v[2]};
  return (conic_eval(q, s) - conic_eval(q, u) - conic_eval(q, v)) / 2;
}

inline RatMatrix conic_matrix(const ConicSpec& q) {
  RatMatrix m(3, 3);
  m.at(0, 0) = q.A;
  m.at(1, 1) = q.B;
  m.at(2, 2) = q.C;
  m.at(0, 1) = m.at(1, 0) = q.D / 2;
  m.at(0, 2) = m.at(2, 0) = q.E / 2;
  m.at(1, 2) = m.at(2, 1) = q.F / 2;
  return m;
}

inline ConicSpec conic_from_matrix(const RatMatrix& m) {
  ConicSpec q;
  q.A = m.at(0, 0);
  q.B = m.at(1, 1);
  q.C = m.at(2, 2);
  q.D = m.at(0, 1) * 2;
  q.E = m.at(0, 2) * 2;
  q.F = m.at(1, 2) * 2;
  return q;
}

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw InternalError("mat_mul: shape mismatch");
  RatMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

// Deterministic invertible integral shear.  Attempt 0 is the identity;
// later attempts draw entries from a fixed-seed engine until the matrix is
// invertible.
inline RatMatrix shear_matrix(int attempt) {
  RatMatrix t(3, 3);
  if (attempt == 0) {
    for (std::size_t i = 0; i < 3; ++i) t.at(i, i) = 1;
    return t;
  }
  std::mt19937 rng(0xA5EEDu + static_cast<std::uint32_t>(attempt));
  while (true) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        t.at(i, j) = Rat(static_cast<int>(rng() % 19u) - 9);
    if (det_exact(t) != 0) return t;
  }
}

// Lagrange interpolation through (x_i, y_i) with distinct rational nodes.
inline UPoly interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
  UPoly acc;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    UPoly li = UPoly::constant(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      li = li * UPoly::from_coeffs({-pts[j].first, Rat(1)});
      denom *= pts[i].first - pts[j].first;
    }
    acc = acc + li * (pts[i].second / denom);
  }
  return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Pairwise intersections.

inline std::vector<IntersectionRecord> line_line_meet(const LineSpec& l1, const LineSpec& l2,
                                                      std::size_t ia, std::size_t ib) {
  const Rat x = l1.b * l2.c - l1.c * l2.b;
  const Rat y = l1.c * l2.a - l1.a * l2.c;
  const Rat z = l1.a * l2.b - l1.b * l2.a;
  if (x == 0 && y == 0 && z == 0)
    throw InternalError("line_line_meet: proportional lines slipped past validation");
  return {{ia, ib, detail::make_proj_point_rat({x, y, z}), 1}};
}

inline std::vector<IntersectionRecord> line_conic_meet(const LineSpec& l, const ConicSpec& q,
                                                       std::size_t ia, std::size_t ib) {
  RatMatrix lm(1, 3);
  lm.at(0, 0) = l.a;
  lm.at(0, 1) = l.b;
  lm.at(0, 2) = l.c;
  auto basis = kernel_basis(lm);
  if (basis.size() != 2)
    throw InternalError("line_conic_meet: line kernel is not 2-dimensional");
  const std::vector<Rat>&u = basis[0], &v = basis[1];

  // Q(s u + t v) = qa s^2 + qm s t + qc t^2.
  const Rat qa = detail::conic_eval(q, u);
  const Rat qc = detail::conic_eval(q, v);
  const Rat qm = detail::conic_bilinear(q, u, v) * 2;

  auto rat_point = [&](const Rat& s, const Rat& t) {
    return detail::make_proj_point_rat(
        {s * u[0] + t * v[0], s * u[1] + t * v[1], s * u[2] + t * v[2]});
  };

  std::vector<IntersectionRecord> out;
  if (qa == 0 && qm == 0 && qc == 0)
    throw InternalError("line_conic_meet: line contained in a smooth conic");
  if (qa == 0) {
    if (qm != 0) {
      // Roots [1:0] and [s:1] with s = -qc/qm, both simple.
      out.push_back({ia, ib, rat_point(Rat(1), Rat(0)), 1});
      out.push_back({ia, ib, rat_point(-qc / qm, Rat(1)), 1});
    } else {
      // qc t^2: the single root [1:0] with multiplicity 2 (tangent line).
      out.push_back({ia, ib, rat_point(Rat(1), Rat(0)), 2});
    }
    return out;
  }
  // qa != 0: both roots have t != 0; solve qa s^2 + qm s + qc = 0 at t = 1.
  const Rat disc = qm * qm - 4 * qa * qc;
  if (disc == 0) {
    out.push_back({ia, ib, rat_point(-qm / (2 * qa), Rat(1)), 2});
    return out;
  }
  Rat sq;
  if (rat_sqrt(disc, &sq)) {
    out.push_back({ia, ib, rat_point((-qm - sq) / (2 * qa), Rat(1)), 1});
    out.push_back({ia, ib, rat_point((-qm + sq) / (2 * qa), Rat(1)), 1});
    return out;
  }
  // Conjugate pair: coordinates live in the quadratic field of the root.
  const UPoly minp = canonical_primitive(UPoly::from_coeffs({qc, qm, qa}));
  const NumberField K(minp);
  const NFElem s = NFElem::generator(&K);
  std::array<NFElem, 3> coords;
  for (int i = 0; i < 3; ++i)
    coords[static_cast<std::size_t>(i)] =
        NFElem(u[static_cast<std::size_t>(i)]) * s + NFElem(v[static_cast<std::size_t>(i)]);
  for (const Box& b : isolate_roots(minp))
    out.push_back({ia, ib, detail::make_proj_point(&K, b, coords), 1});
  return out;
}

inline std::vector<IntersectionRecord> conic_conic_meet(const ConicSpec& q1, const ConicSpec& q2,
                                                        std::size_t ia, std::size_t ib) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    const RatMatrix t = detail::shear_matrix(attempt);
    const RatMatrix tt = t.transposed();
    const ConicSpec c1 = detail::conic_from_matrix(
        detail::mat_mul(detail::mat_mul(tt, detail::conic_matrix(q1)), t));
    const ConicSpec c2 = detail::conic_from_matrix(
        detail::mat_mul(detail::mat_mul(tt, detail::conic_matrix(q2)), t));
    // The projection centre (0:0:1) must avoid both sheared conics so that
    // fibers are genuinely 2:1 and resultant multiplicities push forward.
    if (c1.C == 0 || c2.C == 0) continue;

    // r(x) = Res_z(C1(x,1,z), C2(x,1,z)) via 4x4 Sylvester determinants
    // interpolated through five sample abscissae (leading z-coefficients
    // are the constants c1.C, c2.C, so specialisation commutes).
    auto z_coeffs = [](const ConicSpec& c) {
      // C z^2 + (E x + F) z + (A x^2 + D x + B) after setting y = 1.
      return std::array<UPoly, 3>{UPoly::from_coeffs({c.B, c.D, c.A}),
                                  UPoly::from_coeffs({c.F, c.E}), UPoly::constant(c.C)};
    };
    const auto g1 = z_coeffs(c1), g2 = z_coeffs(c2);
    std::vector<std::pair<Rat, Rat>> samples;
    for (int s = 0; s <= 4; ++s) {
      const Rat x0(s);
      RatMatrix syl(4, 4);
      for (int row = 0; row < 2; ++row)
        for (int d = 0; d <= 2; ++d) {
          syl.at(static_cast<std::size_t>(row), static_cast<std::size_t>(row + d)) =
              g1[static_cast<std::size_t>(2 - d)].eval(x0);
          syl.at(static_cast<std::size_t>(2 + row), static_cast<std::size_t>(row + d)) =
              g2[static_cast<std::size_t>(2 - d)].eval(x0);
        }
      samples.emplace_back(x0, det_exact(syl));
    }
    const UPoly r = detail::interpolate(samples);
    // Degree exactly 4 certifies that no intersection point escaped the
    // y != 0 chart and none went off to infinite x.
    if (r.degree() != 4) continue;

    struct FiberPoint {
      UPoly minpoly;  // canonical primitive irreducible factor of r
      int mult;
      NumberField field;
      std::array<NFElem, 3> coords;  // unsheared, in the field of the factor
    };
    std::vector<FiberPoint> fibers;
    bool shear_ok = true;
    int bezout = 0;
    for (const auto& [w, mu] : squarefree_decomposition(r)) {
      for (const UPoly& f : factor_rational(w)) {
        const UPoly fc = canonical_primitive(f);
        NumberField K(fc);
        const NFElem alpha = NFElem::generator(&K);
        // Fiber polynomials in z over K.
        auto fiber_poly = [&](const std::array<UPoly, 3>& g) {
          std::vector<NFElem> cz(3);
          for (int d = 0; d < 3; ++d)
            cz[static_cast<std::size_t>(d)] =
                lift_to_field(g[static_cast<std::size_t>(d)], &K).eval(alpha);
          return NFPoly::from_coeffs(std::move(cz));
        };
        const NFPoly p1 = fiber_poly(g1), p2 = fiber_poly(g2);
        NFPoly gz = poly_gcd(p1, p2);
        if (gz.degree() < 1)
          throw InternalError("conic_conic_meet: resultant root with trivial fiber gcd");
        NFPoly h = squarefree_part(gz);
        if (h.degree() != 1) {
          // Two distinct intersection points share this x-fiber; the
          // multiplicity bookkeeping is ambiguous, so re-shear.
          shear_ok = false;
          break;
        }
        const NFElem z0 = -(h.coeff(0) / h.coeff(1));
        // Unshear: original point = T * (alpha, 1, z0).
        std::array<NFElem, 3> coords;
        for (std::size_t i = 0; i < 3; ++i)
          coords[i] = NFElem(t.at(i, 0)) * alpha + NFElem(t.at(i, 1)) +
                      NFElem(t.at(i, 2)) * z0;
        bezout += fc.degree() * mu;
        fibers.push_back(FiberPoint{fc, mu, std::move(K), coords});
      }
      if (!shear_ok) break;
    }
    if (!shear_ok) continue;
    if (bezout != 4)
      throw InternalError("conic_conic_meet: multiplicities do not sum to 4");

    std::vector<IntersectionRecord> out;
    for (const FiberPoint& fp : fibers) {
      // Rebind coordinates to the stored field object (they were built with
      // the same modulus, so representatives transfer verbatim).
      for (const Box& b : isolate_roots(fp.minpoly)) {
        std::array<NFElem, 3> c;
        for (std::size_t i = 0; i < 3; ++i)
          c[i] = fp.coords[i].rep().is_constant()
                     ? NFElem(fp.coords[i].rep().coeff(0))
                     : NFElem(&fp.field, fp.coords[i].rep());
        out.push_back({ia, ib, detail::make_proj_point(&fp.field, b, c), fp.mult});
      }
    }
    return out;
  }
  throw NumericalDegeneracyError(
      "conic_conic_meet: no admissible shear found after 8 attempts");
}

// ---------------------------------------------------------------------------
// Grouping and classification.

struct SingularAnalysis {
  std::vector<IntersectionRecord> records;  // all pairwise intersections
  std::vector<SingPoint> points;            // sorted, classified
  WeakCombinatorics wc;
};

inline SingularAnalysis analyze_singularities(const Arrangement& a) {
  {
    ValidationReport vr = validate(a);
    if (!vr.ok())
      throw InvalidArrangementError("invalid arrangement: " + vr.issues.front().message);
  }

  SingularAnalysis res;
  const std::size_t nl = a.lines.size(), nc = a.conics.size();
  const std::size_t n = nl + nc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<IntersectionRecord> recs;
      if (j < nl) {
        recs = line_line_meet(a.lines[i], a.lines[j], i, j);
      } else if (i < nl) {
        recs = line_conic_meet(a.lines[i], a.conics[j - nl], i, j);
      } else {
        recs = conic_conic_meet(a.conics[i - nl], a.conics[j - nl], i, j);
      }
      int total = 0;
      for (const auto& r : recs) total += r.mult;
      const int expected = (i < nl ? 1 : 2) * (j < nl ? 1 : 2);
      if (total != expected)
        throw InternalError("pairwise intersection multiplicities violate Bezout for " +
                            component_label(a, i) + " and " + component_label(a, j));
      for (auto& r : recs) res.records.push_back(std::move(r));
    }

  // Group records by exact point equality.
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < res.records.size(); ++r) {
    bool placed = false;
    for (auto& g : groups) {
      if (point_eq(res.records[g.front()].point, res.records[r].point)) {
        g.push_back(r);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({r});
  }

  for (const auto& g : groups) {
    std::set<std::size_t> comp_set;
    std::map<std::pair<std::size_t, std::size_t>, int> pair_mult;
    for (std::size_t ri : g) {
      const IntersectionRecord& r = res.records[ri];
      comp_set.insert(r.comp_a);
      comp_set.insert(r.comp_b);
      auto key = std::make_pair(r.comp_a, r.comp_b);
      if (pair_mult.count(key))
        throw InternalError("duplicate intersection record for one component pair at " +
                            proj_point_str(r.point));
      pair_mult[key] = r.mult;
    }
    std::vector<std::size_t> comps(comp_set.begin(), comp_set.end());
    const ProjPoint& pt = res.records[g.front()].point;
    // Every pair of components through the point must have met there.
    for (std::size_t x = 0; x < comps.size(); ++x)
      for (std::size_t y = x + 1; y < comps.size(); ++y)
        if (!pair_mult.count(std::make_pair(comps[x], comps[y])))
          throw InternalError("components through a common point lack an intersection record at " +
                              proj_point_str(pt));

    SingType type;
    if (comps.size() == 2) {
      const int m = pair_mult.begin()->second;
      if (m == 1) {
        type = SingType::node;
      } else if (m == 2) {
        type = SingType::tacnode;
      } else {
        throw UnsupportedSingularityError(
            "two branches with contact of order " + std::to_string(m) + " at " +
            proj_point_str(pt) + "; only nodes, tacnodes and ordinary triple points are supported");
      }
    } else if (comps.size() == 3) {
      for (const auto& [key, m] : pair_mult)
        if (m != 1)
          throw UnsupportedSingularityError(
              "tangential contact inside a three-branch point at " + proj_point_str(pt) +
              "; only ordinary triple points are supported");
      type = SingType::triple;
    } else {
      throw UnsupportedSingularityError(
          std::to_string(comps.size()) + " branches through " + proj_point_str(pt) +
          "; at most three are supported");
    }
    res.points.push_back(SingPoint{pt, type, comps});
  }

  std::sort(res.points.begin(), res.points.end(),
            [](const SingPoint& p, const SingPoint& q) { return point_lt(p.point, q.point); });

  res.wc.d = static_cast<int>(nl);
  res.wc.k = static_cast<int>(nc);
  for (const SingPoint& s : res.points) {
    if (s.type == SingType::node) ++res.wc.n2;
    if (s.type == SingType::tacnode) ++res.wc.t;
    if (s.type == SingType::triple) ++res.wc.n3;
  }
  // Global audit: pairwise Bezout totals aggregate to C(m,2) - k.
  const Int m = a.degree();
  const Int lhs = res.wc.n2 + 2 * res.wc.t + 3 * res.wc.n3;
  if (lhs != binom2(m) - res.wc.k)
    throw InternalError("singular point counts violate the global intersection tally");
  return res;
}

}  // namespace nearfree
