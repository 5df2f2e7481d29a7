#pragma once
// Degree-by-degree enumeration of the weak combinatorics (d, k; n2, t, n3)
// of conic-line arrangements whose singularities are nodes, tacnodes and
// ordinary triple points, and the nearly-free refinement of that list.
//
// Base lane (count_admissible): all rows with d >= 1, k >= 1, 2k + d = m,
// nonnegative counts, satisfying the incidence tally
//   (E2)  n2 + 2 t + 3 n3 = C(m, 2) - k,
// plus, for arrangements with at most three components, an exact per-pair
// intersection-budget check (see small_arrangement_budget_ok below).  With
// four or more components no realizability pruning is attempted --
// realizability of a row by an actual arrangement is out of scope here.
//
// Nearly-free lane (nearly_free_candidates): rows of the base lane that in
// addition match, for some admissible exponent pair (d1, d2), d1 + d2 = m,
//   (E1)  n2 + 3 t + 4 n3 = d1^2 + d2^2 + d1 d2 - d1 - 2 d2      (= tau).
// E1 and E2 together imply
//   (E3)  2 (t + n3)      = d1^2 + d2^2 - d1 - 3 d2 + 2 k
// identically; E3 is re-checked as an audit, never assumed.  The admissible
// d1 lie in [max(0, ceil(2m/3 - 2)), floor(m/2)]; the interval is empty for
// m = 11 and for every m >= 13 (2m/3 - 2 > m/2 as soon as m > 12), which
// bounds the degree of any nearly free arrangement in scope by 12.
//
// For m >= 6 a Hirzebruch-type inequality applies and prunes candidates:
//   (H)   8 k + n2 + (3/4) n3 >= d + (5/2) t.
// All evaluations are exact rational arithmetic; no floating point.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nearfree/errors.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

// ceil(2m/3 - 2): the lower bound on the minimal relation degree of a
// nearly free curve of degree m in scope.  Computed through exact rationals.
inline int mdr_lower_bound(int m) {
  if (m < 3) throw UnsupportedDegreeError("mdr_lower_bound: degree must be at least 3");
  const Rat q = Rat(2 * m, 3) - 2;
  return static_cast<int>(int_ceil(q));
}

struct ExponentRange {
  int m = 0;
  int lo = 0, hi = 0;
  bool empty() const { return lo > hi; }
};

// Admissible smaller exponents d1: mdr_lower_bound(m) <= d1 <= floor(m/2)
// (clamped below at 0).
inline ExponentRange exponent_range(int m) {
  if (m < 3) throw UnsupportedDegreeError("exponent_range: degree must be at least 3");
  ExponentRange r;
  r.m = m;
  r.lo = std::max(0, mdr_lower_bound(m));
  r.hi = m / 2;
  return r;
}

// Largest degree with a nonempty exponent range.  The range is empty for
// all m >= 13 (the lower end grows like 2m/3 while the upper is m/2), so a
// finite scan is conclusive.
inline int degree_upper_bound() {
  int best = 0;
  for (int m = 3; m <= 200; ++m)
    if (!exponent_range(m).empty()) best = m;
  return best;
}

// Right-hand side of (E1): the Tjurina number forced by exponents (d1, d2).
inline int exponents_tau(int d1, int d2) {
  return d1 * d1 + d2 * d2 + d1 * d2 - d1 - 2 * d2;
}

inline bool hirzebruch_applicable(int m) { return m >= 6; }

struct HirzebruchCheck {
  bool applicable = false;
  bool holds = true;  // vacuously true when not applicable
  Rat lhs, rhs;       // 8k + n2 + (3/4) n3  vs  d + (5/2) t
};

inline HirzebruchCheck hirzebruch_check(int m, int d, int k, int n2, int t, int n3) {
  HirzebruchCheck h;
  h.applicable = hirzebruch_applicable(m);
  h.lhs = Rat(8 * k + n2) + Rat(3 * n3, 4);
  h.rhs = Rat(d) + Rat(5 * t, 2);
  if (h.applicable) h.holds = h.lhs >= h.rhs;
  return h;
}

struct Candidate {
  int m = 0;
  int d = 0, k = 0;
  int n2 = 0, t = 0, n3 = 0;
  int tau = 0;         // n2 + 3 t + 4 n3, the Tjurina number of any realization
  bool count_ok = false;  // (E2), re-verified at construction
  // Populated by the nearly-free lane only:
  std::vector<std::pair<int, int>> exponents;  // all (d1, d2) matching (E1)
  HirzebruchCheck hirz;
};

// Exact intersection-budget check for arrangements with at most three
// components.  Pairs of distinct components carry a fixed intersection
// budget (line-line 1, line-conic 2, conic-conic 4); a tacnode consumes 2
// units of one pair's budget, an ordinary triple point consumes 1 unit
// from each pair among its three components, and nodes fill whatever
// remains.  With at most three components this bookkeeping is complete:
//   - a triple point needs three distinct components, so with fewer than
//     three components n3 must be 0, and with exactly three components
//     every triple point consumes 1 unit from every pair, forcing
//     n3 <= min(pair budgets);
//   - after the triple points, pair P can host floor((B_P - n3) / 2)
//     tacnodes, and tacnode placements on different pairs are independent.
// Conversely any (t, n3) within these caps is consistent with the budgets
// (place the triple points, then the tacnodes pair by pair, then nodes).
// With four or more components the assignment of tacnodes and triple
// points to pairs is no longer forced, and this module does not attempt
// to decide it: the check is skipped (returns true).
inline bool small_arrangement_budget_ok(int d, int k, int t, int n3) {
  const int comps = d + k;
  if (comps > 3) return true;
  std::vector<int> budgets;
  for (int i = 0; i < d * (d - 1) / 2; ++i) budgets.push_back(1);
  for (int i = 0; i < d * k; ++i) budgets.push_back(2);
  for (int i = 0; i < k * (k - 1) / 2; ++i) budgets.push_back(4);
  if (comps < 3) {
    if (n3 > 0) return false;
  } else {
    for (int b : budgets)
      if (n3 > b) return false;
  }
  int tacnode_cap = 0;
  for (int b : budgets) tacnode_cap += (b - (comps == 3 ? n3 : 0)) / 2;
  return t <= tacnode_cap;
}

// Base lane: every row satisfying the tally (E2), restricted by the exact
// small-arrangement budget check above.  The loop bounds n3 <= B/3,
// t <= B/2, n2 <= B with B = C(m,2) - k are immediate from the tally, so
// the triple loop is trivially exhaustive.  Sorted by (k, n2, t, n3).
inline std::vector<Candidate> count_admissible(int m) {
  if (m < 3)
    throw UnsupportedDegreeError("count_admissible: degree must be at least 3");
  std::vector<Candidate> out;
  const long long pairs = static_cast<long long>(m) * (m - 1) / 2;  // C(m, 2)
  for (int k = 1; m - 2 * k >= 1; ++k) {
    const int d = m - 2 * k;
    const long long budget = pairs - k;  // value both sides of (E2) must take
    if (budget < 0) continue;
    for (long long n3 = 0; 3 * n3 <= budget; ++n3)
      for (long long t = 0; 2 * t <= budget; ++t)
        for (long long n2 = 0; n2 <= budget; ++n2) {
          if (n2 + 2 * t + 3 * n3 != budget) continue;
          if (!small_arrangement_budget_ok(d, k, static_cast<int>(t), static_cast<int>(n3)))
            continue;
          Candidate c;
          c.m = m;
          c.d = d;
          c.k = k;
          c.n2 = static_cast<int>(n2);
          c.t = static_cast<int>(t);
          c.n3 = static_cast<int>(n3);
          c.tau = c.n2 + 3 * c.t + 4 * c.n3;
          c.count_ok = true;
          out.push_back(std::move(c));
        }
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return std::array<int, 4>{a.k, a.n2, a.t, a.n3} <
           std::array<int, 4>{b.k, b.n2, b.t, b.n3};
  });
  return out;
}

struct Elimination {
  Candidate cand;
  std::string reason;
};

struct EnumerationResult {
  int m = 0;
  ExponentRange range;
  bool hirzebruch_applied = false;
  std::vector<Candidate> admissible;
  std::vector<Elimination> eliminated;
  bool open = false;   // candidates exist but realizability is not settled here
  std::string note;    // e.g. the emptiness certificate when range.empty()
};

// Nearly-free lane: filter the base lane by (E1) for every admissible
// exponent pair, audit (E3), then apply the Hirzebruch pruning when it is
// in force (m >= 6).  Degrees whose exponent interval is empty yield an
// empty result carrying the interval-emptiness certificate in `note`; this
// includes every m >= 13.
inline EnumerationResult nearly_free_candidates(int m) {
  if (m < 3)
    throw UnsupportedDegreeError("candidate enumeration requires degree at least 3");

  EnumerationResult res;
  res.m = m;
  res.range = exponent_range(m);
  res.hirzebruch_applied = hirzebruch_applicable(m);
  if (res.range.empty()) {
    res.note = "no admissible exponents: the lower bound ceil(2m/3 - 2) = " +
               std::to_string(res.range.lo) + " exceeds floor(m/2) = " +
               std::to_string(res.range.hi);
    return res;
  }

  const std::vector<Candidate> base = count_admissible(m);
  std::map<std::array<int, 4>, Candidate> rows;  // key (k, n2, t, n3)
  for (int d1 = res.range.lo; d1 <= res.range.hi; ++d1) {
    const int d2 = m - d1;
    const int tau = exponents_tau(d1, d2);
    for (const Candidate& b : base) {
      if (b.n2 + 3 * b.t + 4 * b.n3 != tau) continue;  // (E1) filter
      // (E3) must follow from (E1) and (E2); verify the identity.
      if (2 * (b.t + b.n3) != d1 * d1 + d2 * d2 - d1 - 3 * d2 + 2 * b.k)
        throw InternalError("candidate enumeration: derived identity (E3) failed");
      const std::array<int, 4> key{b.k, b.n2, b.t, b.n3};
      auto it = rows.find(key);
      if (it == rows.end()) {
        Candidate c = b;
        c.exponents.emplace_back(d1, d2);
        rows.emplace(key, std::move(c));
      } else {
        if (it->second.tau != tau)
          throw InternalError("candidate enumeration: conflicting tau for one row");
        it->second.exponents.emplace_back(d1, d2);
      }
    }
  }

  for (auto& [key, cand] : rows) {
    std::sort(cand.exponents.begin(), cand.exponents.end());
    cand.hirz = hirzebruch_check(m, cand.d, cand.k, cand.n2, cand.t, cand.n3);
    if (cand.hirz.applicable && !cand.hirz.holds) {
      res.eliminated.push_back(
          {cand, "fails 8k + n2 + (3/4)n3 >= d + (5/2)t: " + rat_str(cand.hirz.lhs) +
                     " < " + rat_str(cand.hirz.rhs)});
    } else {
      res.admissible.push_back(cand);
    }
  }
  // std::map keys (k, n2, t, n3) keep both output lists in the sort order.
  res.open = (m == 8 || m == 9) && !res.admissible.empty();
  return res;
}

}  // namespace nearfree
