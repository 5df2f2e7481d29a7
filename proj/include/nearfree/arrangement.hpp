#pragma once
// Arrangements of smooth conics and lines in the projective plane.
//
// A line is a x + b y + c z = 0; a conic is
//   A x^2 + B y^2 + C z^2 + D xy + E xz + F yz = 0,
// required to be smooth (nonzero determinant of its symmetric matrix).
// Components are indexed lines-first, then conics.

#include <string>
#include <vector>

#include "nearfree/errors.hpp"
#include "nearfree/hpoly.hpp"
#include "nearfree/linalg.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

struct LineSpec {
  Rat a, b, c;
  bool operator==(const LineSpec& o) const { return a == o.a && b == o.b && c == o.c; }
};

struct ConicSpec {
  Rat A, B, C, D, E, F;
  bool operator==(const ConicSpec& o) const {
    return A == o.A && B == o.B && C == o.C && D == o.D && E == o.E && F == o.F;
  }
};

struct Arrangement {
  std::vector<LineSpec> lines;
  std::vector<ConicSpec> conics;

  std::size_t n_components() const { return lines.size() + conics.size(); }
  int degree() const {
    return static_cast<int>(lines.size()) + 2 * static_cast<int>(conics.size());
  }
  bool component_is_line(std::size_t idx) const { return idx < lines.size(); }
};

// Determinant of the symmetric matrix of the conic; zero exactly when the
// conic is singular (a line pair or a double line).
inline Rat conic_det(const ConicSpec& q) {
  RatMatrix m(3, 3);
  m.at(0, 0) = q.A;
  m.at(1, 1) = q.B;
  m.at(2, 2) = q.C;
  m.at(0, 1) = m.at(1, 0) = q.D / 2;
  m.at(0, 2) = m.at(2, 0) = q.E / 2;
  m.at(1, 2) = m.at(2, 1) = q.F / 2;
  return det_exact(m);
}

inline HPoly line_to_hpoly(const LineSpec& l) {
  HPoly p(1);
  p.set_coeff(Mono{1, 0, 0}, l.a);
  p.set_coeff(Mono{0, 1, 0}, l.b);
  p.set_coeff(Mono{0, 0, 1}, l.c);
  return p;
}

inline HPoly conic_to_hpoly(const ConicSpec& q) {
  HPoly p(2);
  p.set_coeff(Mono{2, 0, 0}, q.A);
  p.set_coeff(Mono{0, 2, 0}, q.B);
  p.set_coeff(Mono{0, 0, 2}, q.C);
  p.set_coeff(Mono{1, 1, 0}, q.D);
  p.set_coeff(Mono{1, 0, 1}, q.E);
  p.set_coeff(Mono{0, 1, 1}, q.F);
  return p;
}

inline HPoly component_hpoly(const Arrangement& a, std::size_t idx) {
  if (idx >= a.n_components()) throw InternalError("component_hpoly: index out of range");
  return a.component_is_line(idx) ? line_to_hpoly(a.lines[idx])
                                  : conic_to_hpoly(a.conics[idx - a.lines.size()]);
}

inline std::string component_label(const Arrangement& a, std::size_t idx) {
  if (a.component_is_line(idx)) return "line " + std::to_string(idx);
  return "conic " + std::to_string(idx - a.lines.size());
}

// --- Validation --------------------------------------------------------------

enum class IssueCode {
  empty_arrangement,
  degenerate_line,
  degenerate_conic,
  repeated_component,
};

inline const char* issue_code_str(IssueCode c) {
  switch (c) {
    case IssueCode::empty_arrangement:
      return "empty_arrangement";
    case IssueCode::degenerate_line:
      return "degenerate_line";
    case IssueCode::degenerate_conic:
      return "degenerate_conic";
    case IssueCode::repeated_component:
      return "repeated_component";
  }
  return "unknown";
}

struct Issue {
  IssueCode code;
  std::string message;
  int component = -1;  // global component index, or -1 for arrangement-wide
};

struct ValidationReport {
  std::vector<Issue> issues;
  std::vector<std::string> warnings;
  bool ok() const { return issues.empty(); }
};

namespace detail {

inline bool proportional(const std::vector<Rat>& u, const std::vector<Rat>& v) {
  // u, v nonzero vectors of equal length: cross-multiplication test.
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (u[i] * v[j] != u[j] * v[i]) return false;
  return true;
}

}  // namespace detail

inline ValidationReport validate(const Arrangement& a) {
  ValidationReport r;
  if (a.n_components() == 0) {
    r.issues.push_back({IssueCode::empty_arrangement, "arrangement has no components", -1});
    return r;
  }
  std::vector<std::vector<Rat>> line_vecs, conic_vecs;
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    const LineSpec& l = a.lines[i];
    if (l.a == 0 && l.b == 0 && l.c == 0)
      r.issues.push_back({IssueCode::degenerate_line,
                          "line " + std::to_string(i) + " has all coefficients zero",
                          static_cast<int>(i)});
    line_vecs.push_back({l.a, l.b, l.c});
  }
  for (std::size_t i = 0; i < a.conics.size(); ++i) {
    const ConicSpec& q = a.conics[i];
    if (conic_det(q) == 0)
      r.issues.push_back({IssueCode::degenerate_conic,
                          "conic " + std::to_string(i) +
                              " is singular (zero determinant); only smooth conics are supported",
                          static_cast<int>(a.lines.size() + i)});
    conic_vecs.push_back({q.A, q.B, q.C, q.D, q.E, q.F});
  }
  auto is_zero_vec = [](const std::vector<Rat>& v) {
    for (const Rat& x : v)
      if (x != 0) return false;
    return true;
  };
  auto check_repeats = [&](const std::vector<std::vector<Rat>>& vecs, const char* kind,
                           std::size_t global_offset) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
      for (std::size_t j = i + 1; j < vecs.size(); ++j) {
        if (is_zero_vec(vecs[i]) || is_zero_vec(vecs[j])) continue;
        if (detail::proportional(vecs[i], vecs[j]))
          r.issues.push_back({IssueCode::repeated_component,
                              std::string(kind) + " " + std::to_string(i) + " and " +
                                  std::string(kind) + " " + std::to_string(j) +
                                  " define the same curve",
                              static_cast<int>(global_offset + j)});
      }
  };
  check_repeats(line_vecs, "line", 0);
  check_repeats(conic_vecs, "conic", a.lines.size());
  if (a.conics.empty())
    r.warnings.push_back("arrangement has no conics (a pure line arrangement)");
  if (a.lines.empty()) r.warnings.push_back("arrangement has no lines");
  return r;
}

// Product of all component polynomials; degree = #lines + 2 #conics.
inline HPoly defining_polynomial(const Arrangement& a) {
  if (a.n_components() == 0)
    throw InvalidArrangementError("defining_polynomial: empty arrangement");
  HPoly f = HPoly::monomial(Mono{0, 0, 0}, Rat(1));
  for (std::size_t i = 0; i < a.n_components(); ++i) f = f * component_hpoly(a, i);
  return f;
}

}  // namespace nearfree
