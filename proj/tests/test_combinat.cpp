// Degree-wise enumeration of weak combinatorics: the incidence tally, the
// exponent window with its degree bound, and the nearly-free candidate
// filter with its elimination certificates.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <set>

#include "nearfree/combinat.hpp"

using namespace nearfree;

namespace {

std::array<int, 5> row(const Candidate& c) { return {c.d, c.k, c.n2, c.t, c.n3}; }

bool has_row(const std::vector<Candidate>& v, std::array<int, 5> r) {
  return std::any_of(v.begin(), v.end(), [&](const Candidate& c) { return row(c) == r; });
}

}  // namespace

TEST_CASE("lower bound for the relation degree") {
  REQUIRE(mdr_lower_bound(3) == 0);
  REQUIRE(mdr_lower_bound(4) == 1);
  REQUIRE(mdr_lower_bound(5) == 2);
  REQUIRE(mdr_lower_bound(10) == 5);
  REQUIRE(mdr_lower_bound(11) == 6);
  REQUIRE(mdr_lower_bound(12) == 6);
  REQUIRE(mdr_lower_bound(13) == 7);
  REQUIRE_THROWS_AS(mdr_lower_bound(2), UnsupportedDegreeError);
}

TEST_CASE("exponent windows and the degree bound") {
  const ExponentRange r3 = exponent_range(3);
  REQUIRE((r3.lo == 0 && r3.hi == 1 && !r3.empty()));
  const ExponentRange r10 = exponent_range(10);
  REQUIRE((r10.lo == 5 && r10.hi == 5 && !r10.empty()));
  const ExponentRange r11 = exponent_range(11);
  REQUIRE((r11.lo == 6 && r11.hi == 5 && r11.empty()));
  const ExponentRange r12 = exponent_range(12);
  REQUIRE((r12.lo == 6 && r12.hi == 6 && !r12.empty()));
  const ExponentRange r13 = exponent_range(13);
  REQUIRE((r13.lo == 7 && r13.hi == 6 && r13.empty()));

  // the window is empty for every degree beyond 12
  REQUIRE(degree_upper_bound() == 12);
  for (int m = 13; m <= 40; ++m) REQUIRE(exponent_range(m).empty());
}

TEST_CASE("candidate Tjurina numbers from exponents") {
  REQUIRE(exponents_tau(1, 2) == 2);
  REQUIRE(exponents_tau(0, 3) == 3);
  REQUIRE(exponents_tau(2, 2) == 6);
  REQUIRE(exponents_tau(1, 3) == 6);
  REQUIRE(exponents_tau(2, 3) == 11);
  REQUIRE(exponents_tau(2, 4) == 18);
  REQUIRE(exponents_tau(3, 3) == 18);
  REQUIRE(exponents_tau(3, 4) == 26);
  REQUIRE(exponents_tau(5, 5) == 60);
  REQUIRE(exponents_tau(6, 6) == 90);
}

TEST_CASE("sharpness inequality") {
  REQUIRE(hirzebruch_applicable(6));
  REQUIRE(!hirzebruch_applicable(5));

  // degree 7 realized data: 8 + 6 + 3/2 >= 5 + 10
  const HirzebruchCheck h1 = hirzebruch_check(7, 5, 1, 6, 4, 2);
  REQUIRE(h1.applicable);
  REQUIRE(h1.holds);
  REQUIRE(h1.lhs == Rat(31, 2));
  REQUIRE(h1.rhs == Rat(15));

  // a degree-10 row on the boundary side that survives
  const HirzebruchCheck h2 = hirzebruch_check(10, 8, 1, 0, 4, 14);
  REQUIRE(h2.applicable);
  REQUIRE(h2.holds);
  REQUIRE(h2.lhs == Rat(37, 2));
  REQUIRE(h2.rhs == Rat(18));

  // not applied below degree 6
  const HirzebruchCheck h3 = hirzebruch_check(4, 2, 1, 3, 1, 0);
  REQUIRE(!h3.applicable);
}

TEST_CASE("per-point budgets for arrangements with at most three components") {
  // one line + one conic: a tacnode fits, a triple point cannot exist
  REQUIRE(small_arrangement_budget_ok(1, 1, 1, 0));
  REQUIRE(!small_arrangement_budget_ok(1, 1, 2, 0));
  REQUIRE(!small_arrangement_budget_ok(1, 1, 0, 1));

  // two lines + one conic: two line-conic pairs at budget 2 each
  REQUIRE(small_arrangement_budget_ok(2, 1, 2, 0));
  REQUIRE(!small_arrangement_budget_ok(2, 1, 1, 1));  // triple + tacnode overflow
  REQUIRE(small_arrangement_budget_ok(2, 1, 0, 1));

  // one line + two conics
  REQUIRE(small_arrangement_budget_ok(1, 2, 1, 2));
  REQUIRE(!small_arrangement_budget_ok(1, 2, 2, 1));

  // four or more components: no pruning at this layer
  REQUIRE(small_arrangement_budget_ok(3, 1, 99, 99));
  REQUIRE(small_arrangement_budget_ok(2, 2, 99, 99));
}

TEST_CASE("counting lane: pinned small tables") {
  const auto m3 = count_admissible(3);
  REQUIRE(m3.size() == 2);
  REQUIRE(row(m3[0]) == std::array<int, 5>{1, 1, 0, 1, 0});
  REQUIRE(row(m3[1]) == std::array<int, 5>{1, 1, 2, 0, 0});
  REQUIRE(m3[0].tau == 3);
  REQUIRE(m3[1].tau == 2);

  const auto m4 = count_admissible(4);
  REQUIRE(m4.size() == 4);
  REQUIRE(row(m4[0]) == std::array<int, 5>{2, 1, 1, 2, 0});
  REQUIRE(row(m4[1]) == std::array<int, 5>{2, 1, 2, 0, 1});
  REQUIRE(row(m4[2]) == std::array<int, 5>{2, 1, 3, 1, 0});
  REQUIRE(row(m4[3]) == std::array<int, 5>{2, 1, 5, 0, 0});

  REQUIRE_THROWS_AS(count_admissible(2), UnsupportedDegreeError);
}

TEST_CASE("counting lane: sizes and invariants across degrees") {
  const std::array<std::size_t, 10> sizes{2, 4, 21, 45, 121, 210, 444, 690, 1261, 1815};
  for (int m = 3; m <= 12; ++m) {
    const auto rows = count_admissible(m);
    REQUIRE(rows.size() == sizes[static_cast<std::size_t>(m - 3)]);

    std::set<std::array<int, 5>> seen;
    for (const Candidate& c : rows) {
      REQUIRE(c.m == m);
      REQUIRE(c.d >= 1);
      REQUIRE(c.k >= 1);
      REQUIRE(2 * c.k + c.d == m);
      REQUIRE((c.n2 >= 0 && c.t >= 0 && c.n3 >= 0));
      // the tally constraint itself
      const long long budget = 1LL * m * (m - 1) / 2 - c.k;
      REQUIRE(1LL * c.n2 + 2 * c.t + 3 * c.n3 == budget);
      REQUIRE(c.tau == c.n2 + 3 * c.t + 4 * c.n3);
      REQUIRE(c.count_ok);
      REQUIRE(seen.insert(row(c)).second);  // no duplicates
    }

    // sorted by (k, n2, t, n3)
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      const auto a = std::array<int, 4>{rows[i].k, rows[i].n2, rows[i].t, rows[i].n3};
      const auto b =
          std::array<int, 4>{rows[i + 1].k, rows[i + 1].n2, rows[i + 1].t, rows[i + 1].n3};
      REQUIRE(a < b);
    }
  }
}

TEST_CASE("nearly-free lane: small degrees in full") {
  const EnumerationResult e3 = nearly_free_candidates(3);
  REQUIRE(e3.admissible.size() == 2);
  REQUIRE(e3.eliminated.empty());
  REQUIRE(!e3.hirzebruch_applied);
  REQUIRE(row(e3.admissible[0]) == std::array<int, 5>{1, 1, 0, 1, 0});
  REQUIRE(e3.admissible[0].tau == 3);
  REQUIRE(e3.admissible[0].exponents ==
          std::vector<std::pair<int, int>>{{0, 3}});
  REQUIRE(row(e3.admissible[1]) == std::array<int, 5>{1, 1, 2, 0, 0});
  REQUIRE(e3.admissible[1].exponents ==
          std::vector<std::pair<int, int>>{{1, 2}});

  const EnumerationResult e4 = nearly_free_candidates(4);
  REQUIRE(e4.admissible.size() == 2);
  REQUIRE(row(e4.admissible[0]) == std::array<int, 5>{2, 1, 2, 0, 1});
  REQUIRE(row(e4.admissible[1]) == std::array<int, 5>{2, 1, 3, 1, 0});
  for (const Candidate& c : e4.admissible) {
    REQUIRE(c.tau == 6);
    REQUIRE(c.exponents == std::vector<std::pair<int, int>>{{1, 3}, {2, 2}});
  }

  const EnumerationResult e5 = nearly_free_candidates(5);
  REQUIRE(e5.admissible.size() == 5);
  REQUIRE(e5.eliminated.empty());
  for (const Candidate& c : e5.admissible) {
    REQUIRE(c.tau == 11);
    REQUIRE(c.exponents == std::vector<std::pair<int, int>>{{2, 3}});
  }
  REQUIRE(has_row(e5.admissible, {3, 1, 3, 0, 2}));
  REQUIRE(has_row(e5.admissible, {3, 1, 4, 1, 1}));
  REQUIRE(has_row(e5.admissible, {3, 1, 5, 2, 0}));
  REQUIRE(has_row(e5.admissible, {1, 2, 0, 1, 2}));
  REQUIRE(has_row(e5.admissible, {1, 2, 2, 3, 0}));

  const EnumerationResult e6 = nearly_free_candidates(6);
  REQUIRE(e6.admissible.size() == 9);
  REQUIRE(e6.eliminated.empty());
  REQUIRE(e6.hirzebruch_applied);
  for (const Candidate& c : e6.admissible) {
    REQUIRE(c.tau == 18);
    REQUIRE(c.exponents == std::vector<std::pair<int, int>>{{2, 4}, {3, 3}});
  }
  REQUIRE(has_row(e6.admissible, {4, 1, 2, 0, 4}));
  REQUIRE(has_row(e6.admissible, {2, 2, 0, 2, 3}));
}

TEST_CASE("nearly-free lane: degree 7 eliminations carry certificates") {
  const EnumerationResult e7 = nearly_free_candidates(7);
  REQUIRE(e7.admissible.size() == 14);
  REQUIRE(e7.eliminated.size() == 2);
  REQUIRE(!e7.open);
  for (const Candidate& c : e7.admissible) REQUIRE(c.tau == 26);
  REQUIRE(has_row(e7.admissible, {5, 1, 6, 4, 2}));

  REQUIRE(row(e7.eliminated[0].cand) == std::array<int, 5>{5, 1, 7, 5, 1});
  REQUIRE(row(e7.eliminated[1].cand) == std::array<int, 5>{5, 1, 8, 6, 0});
  for (const Elimination& el : e7.eliminated) {
    REQUIRE(el.reason.find("8k + n2 + (3/4)n3 >= d + (5/2)t") != std::string::npos);
    REQUIRE(!el.cand.hirz.holds);
    REQUIRE(el.cand.hirz.applicable);
  }
}

TEST_CASE("nearly-free lane: bookkeeping across all supported degrees") {
  struct Expect {
    int m;
    std::size_t adm, elim;
    bool open;
  };
  const Expect table[] = {{3, 2, 0, false},  {4, 2, 0, false},  {5, 5, 0, false},
                          {6, 9, 0, false},  {7, 14, 2, false}, {8, 9, 12, true},
                          {9, 10, 20, true}, {10, 0, 34, false}, {11, 0, 0, false},
                          {12, 0, 50, false}};
  for (const Expect& e : table) {
    const EnumerationResult r = nearly_free_candidates(e.m);
    REQUIRE(r.m == e.m);
    REQUIRE(r.admissible.size() == e.adm);
    REQUIRE(r.eliminated.size() == e.elim);
    REQUIRE(r.open == e.open);

    // every handled row also appears in the counting lane
    const auto base = count_admissible(e.m);
    auto in_base = [&](const Candidate& c) { return has_row(base, row(c)); };
    for (const Candidate& c : r.admissible) REQUIRE(in_base(c));
    for (const Elimination& el : r.eliminated) REQUIRE(in_base(el.cand));

    // each candidate's tau matches each attached exponent pair
    for (const Candidate& c : r.admissible) {
      REQUIRE(!c.exponents.empty());
      for (const auto& [d1, d2] : c.exponents) {
        REQUIRE(d1 + d2 == e.m);
        REQUIRE(exponents_tau(d1, d2) == c.tau);
        REQUIRE(d1 >= mdr_lower_bound(e.m));
        REQUIRE(d1 <= e.m / 2);
      }
    }
  }
}

TEST_CASE("nearly-free lane: degrees 10 and 12 boundary structure") {
  // all rows at degree 10 satisfy t + n3 = 15 + k and t = 4k + n2,
  // and every one of them is eliminated
  const EnumerationResult e10 = nearly_free_candidates(10);
  REQUIRE(e10.admissible.empty());
  REQUIRE(e10.eliminated.size() == 34);
  for (const Elimination& el : e10.eliminated) {
    const Candidate& c = el.cand;
    REQUIRE(c.t + c.n3 == 15 + c.k);
    REQUIRE(c.t == 4 * c.k + c.n2);
  }

  const EnumerationResult e12 = nearly_free_candidates(12);
  REQUIRE(e12.admissible.empty());
  REQUIRE(e12.eliminated.size() == 50);
  for (const Elimination& el : e12.eliminated) {
    const Candidate& c = el.cand;
    REQUIRE(2 * (c.t + c.n3) == 48 + 2 * c.k);
    REQUIRE(c.n2 + c.n3 == 18 - 3 * c.k);
    REQUIRE((c.k >= 1 && c.k <= 5));
  }
}

TEST_CASE("nearly-free lane: empty exponent window is certified, not an error") {
  const EnumerationResult e11 = nearly_free_candidates(11);
  REQUIRE(e11.admissible.empty());
  REQUIRE(e11.eliminated.empty());
  REQUIRE(e11.range.empty());
  REQUIRE(e11.note.find("6") != std::string::npos);
  REQUIRE(e11.note.find("5") != std::string::npos);

  const EnumerationResult e13 = nearly_free_candidates(13);
  REQUIRE(e13.admissible.empty());
  REQUIRE(e13.range.empty());
  REQUIRE(!e13.note.empty());

  REQUIRE(nearly_free_candidates(40).admissible.empty());
  REQUIRE_THROWS_AS(nearly_free_candidates(2), UnsupportedDegreeError);
}

TEST_CASE("realized fixture combinatorics appear among the candidates") {
  struct Fixture {
    int m;
    std::array<int, 5> wc;
  };
  const Fixture fx[] = {{3, {1, 1, 2, 0, 0}}, {4, {2, 1, 2, 0, 1}}, {4, {2, 1, 3, 1, 0}},
                        {5, {3, 1, 3, 0, 2}}, {6, {4, 1, 2, 0, 4}}, {7, {5, 1, 6, 4, 2}}};
  for (const Fixture& f : fx) {
    const EnumerationResult r = nearly_free_candidates(f.m);
    REQUIRE(has_row(r.admissible, f.wc));
  }
}
