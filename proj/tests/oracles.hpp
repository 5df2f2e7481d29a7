#pragma once
// Independent reference implementations used only by the test suite.
//
// These deliberately avoid the library's own linear algebra and polynomial
// multiplication routines: ranks and determinants are recomputed with a
// plain Gauss-Jordan elimination over the rationals, and products of
// trivariate polynomials with a map-based schoolbook multiply.  Tests
// compare the library against these oracles on randomized inputs.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "nearfree/hpoly.hpp"
#include "nearfree/linalg.hpp"
#include "nearfree/rational.hpp"

namespace testutil {

using nearfree::HPoly;
using nearfree::Mono;
using nearfree::Rat;
using nearfree::RatMatrix;

// --- naive exact linear algebra ---------------------------------------------

inline std::vector<std::vector<Rat>> to_rows(const RatMatrix& m) {
  std::vector<std::vector<Rat>> rows(m.rows(), std::vector<Rat>(m.cols(), Rat(0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

inline std::size_t oracle_rank(std::vector<std::vector<Rat>> a) {
  if (a.empty() || a[0].empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const Rat inv = Rat(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t oracle_rank(const RatMatrix& m) { return oracle_rank(to_rows(m)); }

inline Rat oracle_det(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Rat inv = Rat(1) / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

inline Rat oracle_det(const RatMatrix& m) { return oracle_det(to_rows(m)); }

// --- naive trivariate polynomial arithmetic ---------------------------------

using NaivePoly = std::map<std::array<int, 3>, Rat>;

inline NaivePoly to_naive(const HPoly& p) {
  NaivePoly out;
  for (const Mono& mo : nearfree::all_monos(p.degree())) {
    const Rat& c = p.coeff(mo);
    if (!(c == 0)) out[{mo.i, mo.j, mo.k}] = c;
  }
  return out;
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b) {
  NaivePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      const std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

inline bool naive_eq(const NaivePoly& a, const HPoly& p) {
  NaivePoly b = to_naive(p);
  NaivePoly ac = a;
  for (auto it = ac.begin(); it != ac.end();)
    it = (it->second == 0) ? ac.erase(it) : std::next(it);
  return ac == b;
}

// Random homogeneous polynomial of the given degree with small integer
// coefficients (possibly with zero coefficients, never identically zero).
inline HPoly random_hpoly(std::mt19937& rng, int degree) {
  for (;;) {
    HPoly p(degree);
    bool nonzero = false;
    for (const Mono& mo : nearfree::all_monos(degree)) {
      const int c = static_cast<int>(rng() % 11) - 5;
      if (c != 0) {
        p.set_coeff(mo, Rat(c));
        nonzero = true;
      }
    }
    if (nonzero) return p;
  }
}

// --- helper for driving the command-line binary -----------------------------

// Runs a shell command, capturing combined stdout+stderr; returns the exit
// status (-1 if the process did not terminate normally).
inline int run_command(const std::string& cmd, std::string& output) {
  output.clear();
  const std::string full = cmd + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(full.c_str(), "r"), pclose);
  if (!pipe) return -1;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe.get())) > 0) output.append(buf, n);
  const int status = pclose(pipe.release());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
}

}  // namespace testutil
