#pragma once
// End-to-end analysis of one arrangement and report rendering.
//
// The pipeline cross-checks its two independent computations of the total
// Tjurina number -- geometric (from classified singular points) and
// algebraic (from Milnor algebra dimensions) -- and refuses to emit a
// report if they disagree: a mismatch means a bug, not a result.  Every
// report carries a constraint checklist (incidence tally, lower bound on
// the minimal relation degree, Hirzebruch-type inequality) with the exact
// values on both sides.

#include <string>
#include <vector>

#include <json.hpp>

#include "nearfree/arrangement.hpp"
#include "nearfree/arrangement_json.hpp"
#include "nearfree/combinat.hpp"
#include "nearfree/errors.hpp"
#include "nearfree/hpoly.hpp"
#include "nearfree/jacobian.hpp"
#include "nearfree/rational.hpp"
#include "nearfree/singular.hpp"

namespace nearfree {

// Checklist shown in every analysis report:
//   - count:  C(m,2) - k = n2 + 2t + 3n3  (incidence tally)
//   - mdr lower bound:  r >= ceil(2m/3 - 2), applicable to nearly free curves
//   - Hirzebruch-type inequality, applicable for m >= 6
struct ConstraintChecklist {
  long long count_lhs = 0, count_rhs = 0;
  bool count_ok = false;
  int mdr_bound = 0;
  bool mdr_bound_applicable = false;  // the bound holds for nearly free curves only
  bool mdr_bound_ok = true;           // vacuously true when not applicable
  HirzebruchCheck hirz;
};

struct AnalysisReport {
  Arrangement arr;
  ValidationReport validation;
  HPoly f{0};
  SingularAnalysis sing;
  NearFreeVerdict verdict;
  ConstraintChecklist checks;
};

// Full pipeline.  Throws InvalidArrangementError for rejected input,
// UnsupportedSingularityError for out-of-scope singularities, and
// InternalError when the geometric and algebraic invariants disagree.
inline AnalysisReport analyze(const Arrangement& a) {
  AnalysisReport rep;
  rep.arr = a;
  rep.validation = validate(a);
  if (!rep.validation.ok())
    throw InvalidArrangementError("invalid arrangement: " + rep.validation.issues.front().message);
  rep.f = defining_polynomial(a);
  rep.sing = analyze_singularities(a);
  rep.verdict = nearly_free_verdict(rep.f);

  const WeakCombinatorics& wc = rep.sing.wc;
  const int tau_geom = tjurina_from_wc(wc);
  if (tau_geom != rep.verdict.tau)
    throw InternalError("total Tjurina number mismatch: " + std::to_string(tau_geom) +
                        " from singular points vs " + std::to_string(rep.verdict.tau) +
                        " from Milnor algebra dimensions");

  ConstraintChecklist& ck = rep.checks;
  const int m = rep.verdict.m;
  ck.count_lhs = static_cast<long long>(m) * (m - 1) / 2 - wc.k;
  ck.count_rhs = wc.n2 + 2LL * wc.t + 3LL * wc.n3;
  ck.count_ok = ck.count_lhs == ck.count_rhs;
  if (!ck.count_ok)
    throw InternalError("incidence tally failed: C(m,2) - k = " + std::to_string(ck.count_lhs) +
                        " but n2 + 2t + 3n3 = " + std::to_string(ck.count_rhs));
  ck.mdr_bound = m >= 3 ? mdr_lower_bound(m) : 0;
  ck.mdr_bound_applicable = rep.verdict.nearly_free && m >= 3;
  if (ck.mdr_bound_applicable) {
    ck.mdr_bound_ok = rep.verdict.r >= ck.mdr_bound;
    if (!ck.mdr_bound_ok)
      throw InternalError("nearly free verdict with r = " + std::to_string(rep.verdict.r) +
                          " below the lower bound ceil(2m/3 - 2) = " +
                          std::to_string(ck.mdr_bound));
  }
  ck.hirz = hirzebruch_check(m, wc.d, wc.k, wc.n2, wc.t, wc.n3);
  if (ck.hirz.applicable && !ck.hirz.holds)
    throw InternalError(
        "realized arrangement violates the Hirzebruch-type inequality; classification or "
        "counting is broken");
  return rep;
}

inline std::string report_text(const AnalysisReport& rep) {
  std::string out;
  const WeakCombinatorics& wc = rep.sing.wc;
  out += "arrangement: " + std::to_string(wc.d) + " line(s), " + std::to_string(wc.k) +
         " conic(s), degree m = " + std::to_string(rep.verdict.m) + "\n";
  for (std::size_t i = 0; i < rep.arr.n_components(); ++i)
    out += "  [" + std::to_string(i) + "] " + component_label(rep.arr, i) + ": " +
           hpoly_str(component_hpoly(rep.arr, i)) + " = 0\n";
  for (const std::string& w : rep.validation.warnings) out += "  note: " + w + "\n";
  out += "defining polynomial: f = " + hpoly_str(rep.f) + "\n";

  out += "singular points (" + std::to_string(rep.sing.points.size()) + "):\n";
  for (const SingPoint& s : rep.sing.points) {
    out += "  " + proj_point_str(s.point) + "  " + sing_type_str(s.type) + "  components {";
    for (std::size_t i = 0; i < s.components.size(); ++i)
      out += (i ? ", " : "") + std::to_string(s.components[i]);
    out += std::string("}  [") + (point_is_real(s.point) ? "real" : "complex") + "]\n";
  }
  out += "weak combinatorics: (d, k; n2, t, n3) = (" + std::to_string(wc.d) + ", " +
         std::to_string(wc.k) + "; " + std::to_string(wc.n2) + ", " + std::to_string(wc.t) +
         ", " + std::to_string(wc.n3) + ")\n";

  out += "tjurina: geometric n2 + 3t + 4n3 = " + std::to_string(tjurina_from_wc(wc)) +
         ", algebraic (Milnor algebra) = " + std::to_string(rep.verdict.tau) +
         " [stabilized at degree " + std::to_string(rep.verdict.tjurina_res.stabilized_at) +
         "]\n";
  out += "mdr: r = " + std::to_string(rep.verdict.r);
  if (rep.verdict.mdr_res.cone) out += "  [r = 0: constant relation, cone-like]";
  if (rep.verdict.mdr_res.koszul_hit) out += "  [r = m-1: Koszul degree]";
  out += "\n  witness relation: a fx + b fy + c fz = 0 with\n";
  const char* names[3] = {"a", "b", "c"};
  for (int v = 0; v < 3; ++v)
    out += std::string("    ") + names[v] + " = " +
           hpoly_str(rep.verdict.mdr_res.witness[static_cast<std::size_t>(v)]) + "\n";

  out += "test: r^2 - r(m-1) + (m-1)^2 = " + rat_str(Rat(rep.verdict.lhs)) +
         " vs tau = " + std::to_string(rep.verdict.tau) + ", tau + 1 = " +
         std::to_string(rep.verdict.tau + 1) + "\n";
  if (rep.verdict.free_curve) {
    out += "verdict: FREE with exponents (" + std::to_string(rep.verdict.d1) + ", " +
           std::to_string(rep.verdict.d2) + ")\n";
  } else if (rep.verdict.nearly_free) {
    out += "verdict: NEARLY FREE with exponents (" + std::to_string(rep.verdict.d1) + ", " +
           std::to_string(rep.verdict.d2) + ")\n";
    out += "resolution: " +
           resolution_shape(rep.verdict.m, rep.verdict.d1, rep.verdict.d2) + "\n";
  } else {
    out += "verdict: NOT nearly free (and not free)\n";
  }

  const ConstraintChecklist& ck = rep.checks;
  out += "checks:\n";
  out += "  count identity: C(m,2) - k = " + std::to_string(ck.count_lhs) +
         " = n2 + 2t + 3n3 = " + std::to_string(ck.count_rhs) + "  [" +
         (ck.count_ok ? "ok" : "FAILED") + "]\n";
  if (ck.mdr_bound_applicable) {
    out += "  mdr lower bound: r = " + std::to_string(rep.verdict.r) +
           " >= ceil(2m/3 - 2) = " + std::to_string(ck.mdr_bound) + "  [" +
           (ck.mdr_bound_ok ? "ok" : "FAILED") + "]\n";
  } else {
    out += "  mdr lower bound: not applicable (verdict is not nearly free)\n";
  }
  if (ck.hirz.applicable) {
    out += "  hirzebruch: 8k + n2 + (3/4)n3 = " + rat_str(ck.hirz.lhs) +
           " >= " + rat_str(ck.hirz.rhs) + " = d + (5/2)t  [" +
           (ck.hirz.holds ? "ok" : "FAILED") + "]\n";
  } else {
    out += "  hirzebruch: not applicable (m < 6)\n";
  }
  return out;
}

namespace detail {

inline nlohmann::ordered_json algnum_json(const AlgNum& a) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (a.is_rational()) {
    j["rational"] = rat_str(a.rational_value());
  } else {
    j["minpoly"] = upoly_str(a.minpoly());
    auto [re, im] = a.approx(52);
    j["approx"] = nlohmann::ordered_json::array({re, im});
  }
  return j;
}

}  // namespace detail

inline nlohmann::ordered_json report_json(const AnalysisReport& rep) {
  using json = nlohmann::ordered_json;
  json j = json::object();
  j["schema"] = 1;
  j["degree"] = rep.verdict.m;
  j["components"] = json::array();
  for (std::size_t i = 0; i < rep.arr.n_components(); ++i) {
    json c = json::object();
    c["index"] = i;
    c["kind"] = rep.arr.component_is_line(i) ? "line" : "conic";
    c["polynomial"] = hpoly_str(component_hpoly(rep.arr, i));
    j["components"].push_back(c);
  }
  j["warnings"] = rep.validation.warnings;
  j["defining_polynomial"] = hpoly_str(rep.f);
  j["singular_points"] = json::array();
  for (const SingPoint& s : rep.sing.points) {
    json p = json::object();
    p["type"] = sing_type_str(s.type);
    p["real"] = point_is_real(s.point);
    p["components"] = s.components;
    p["coordinates"] = json::array();
    for (int c = 0; c < 3; ++c)
      p["coordinates"].push_back(detail::algnum_json(s.point.c[static_cast<std::size_t>(c)]));
    p["display"] = proj_point_str(s.point);
    j["singular_points"].push_back(p);
  }
  const WeakCombinatorics& wc = rep.sing.wc;
  j["weak_combinatorics"] = {{"d", wc.d}, {"k", wc.k}, {"n2", wc.n2}, {"t", wc.t}, {"n3", wc.n3}};
  json tj = json::object();
  tj["geometric"] = tjurina_from_wc(wc);
  tj["algebraic"] = rep.verdict.tau;
  tj["stabilized_at"] = rep.verdict.tjurina_res.stabilized_at;
  tj["dims"] = json::array();
  for (const auto& [k, dim] : rep.verdict.tjurina_res.dims)
    tj["dims"].push_back(json::array({k, dim}));
  j["tjurina"] = tj;
  json md = json::object();
  md["r"] = rep.verdict.r;
  md["koszul_hit"] = rep.verdict.mdr_res.koszul_hit;
  md["cone"] = rep.verdict.mdr_res.cone;
  md["witness"] = json::array();
  for (int v = 0; v < 3; ++v)
    md["witness"].push_back(hpoly_str(rep.verdict.mdr_res.witness[static_cast<std::size_t>(v)]));
  j["mdr"] = md;
  json verdict = json::object();
  verdict["lhs"] = rat_str(Rat(rep.verdict.lhs));
  verdict["tau"] = rep.verdict.tau;
  verdict["free"] = rep.verdict.free_curve;
  verdict["nearly_free"] = rep.verdict.nearly_free;
  verdict["exponents"] = json::array({rep.verdict.d1, rep.verdict.d2});
  if (rep.verdict.nearly_free)
    verdict["resolution"] = resolution_shape(rep.verdict.m, rep.verdict.d1, rep.verdict.d2);
  j["verdict"] = verdict;

  const ConstraintChecklist& ck = rep.checks;
  json checks = json::object();
  checks["count"] = {{"lhs", ck.count_lhs}, {"rhs", ck.count_rhs}, {"ok", ck.count_ok}};
  checks["mdr_lower_bound"] = {{"applicable", ck.mdr_bound_applicable},
                               {"bound", ck.mdr_bound},
                               {"r", rep.verdict.r},
                               {"ok", ck.mdr_bound_ok}};
  checks["hirzebruch"] = {{"applicable", ck.hirz.applicable},
                          {"holds", ck.hirz.holds},
                          {"lhs", rat_str(ck.hirz.lhs)},
                          {"rhs", rat_str(ck.hirz.rhs)}};
  j["checks"] = checks;
  return j;
}

// --- Enumeration reports ------------------------------------------------------

inline std::string candidate_row_str(const Candidate& c) {
  std::string out = "(d, k; n2, t, n3) = (" + std::to_string(c.d) + ", " + std::to_string(c.k) +
                    "; " + std::to_string(c.n2) + ", " + std::to_string(c.t) + ", " +
                    std::to_string(c.n3) + ")  tau = " + std::to_string(c.tau) +
                    "  exponents";
  for (const auto& [d1, d2] : c.exponents)
    out += " (" + std::to_string(d1) + ", " + std::to_string(d2) + ")";
  return out;
}

inline std::string base_row_str(const Candidate& c) {
  return "(d, k; n2, t, n3) = (" + std::to_string(c.d) + ", " + std::to_string(c.k) + "; " +
         std::to_string(c.n2) + ", " + std::to_string(c.t) + ", " + std::to_string(c.n3) +
         ")  tau = " + std::to_string(c.tau);
}

// Base lane: rows constrained only by the incidence tally.
inline std::string count_table_text(int m, const std::vector<Candidate>& rows) {
  std::string out;
  out += "degree m = " + std::to_string(m) + "\n";
  out += "constraint: n2 + 2t + 3n3 = C(m,2) - k, with d >= 1, k >= 1, 2k + d = m\n";
  out += "rows (" + std::to_string(rows.size()) + "):\n";
  for (const Candidate& c : rows) out += "  " + base_row_str(c) + "\n";
  return out;
}

inline nlohmann::ordered_json count_table_json(int m, const std::vector<Candidate>& rows) {
  using json = nlohmann::ordered_json;
  json j = json::object();
  j["schema"] = 1;
  j["degree"] = m;
  j["constraint"] = "n2 + 2t + 3n3 = C(m,2) - k";
  j["count"] = rows.size();
  j["rows"] = json::array();
  for (const Candidate& c : rows) {
    json r = json::object();
    r["d"] = c.d;
    r["k"] = c.k;
    r["n2"] = c.n2;
    r["t"] = c.t;
    r["n3"] = c.n3;
    r["tau"] = c.tau;
    j["rows"].push_back(r);
  }
  return j;
}

// Nearly-free lane.
inline std::string enumeration_text(const EnumerationResult& e) {
  std::string out;
  out += "degree m = " + std::to_string(e.m) + "\n";
  if (e.range.empty()) {
    out += "admissible candidates: none\n";
    out += "certificate: " + e.note + "\n";
    return out;
  }
  out += "exponent range: d1 in [" + std::to_string(e.range.lo) + ", " +
         std::to_string(e.range.hi) + "], d2 = m - d1\n";
  out += "hirzebruch filter: " +
         std::string(e.hirzebruch_applied ? "applied (m >= 6)" : "not applicable (m < 6)") + "\n";
  out += "admissible candidates (" + std::to_string(e.admissible.size()) + "):\n";
  for (const Candidate& c : e.admissible) out += "  " + candidate_row_str(c) + "\n";
  if (e.open)
    out += "status: OPEN -- candidates survive all tests here; realizability is not decided "
           "by this tool\n";
  out += "eliminated candidates (" + std::to_string(e.eliminated.size()) + "):\n";
  for (const Elimination& el : e.eliminated)
    out += "  " + candidate_row_str(el.cand) + "\n    " + el.reason + "\n";
  return out;
}

inline nlohmann::ordered_json enumeration_json(const EnumerationResult& e) {
  using json = nlohmann::ordered_json;
  auto cand = [](const Candidate& c) {
    json r = json::object();
    r["d"] = c.d;
    r["k"] = c.k;
    r["n2"] = c.n2;
    r["t"] = c.t;
    r["n3"] = c.n3;
    r["tau"] = c.tau;
    r["exponents"] = json::array();
    for (const auto& [d1, d2] : c.exponents) r["exponents"].push_back(json::array({d1, d2}));
    json hz = json::object();
    hz["applicable"] = c.hirz.applicable;
    hz["holds"] = c.hirz.holds;
    hz["lhs"] = rat_str(c.hirz.lhs);
    hz["rhs"] = rat_str(c.hirz.rhs);
    r["hirzebruch"] = hz;
    return r;
  };
  json j = json::object();
  j["schema"] = 1;
  j["degree"] = e.m;
  j["exponent_range"] = json::object();
  j["exponent_range"]["lo"] = e.range.lo;
  j["exponent_range"]["hi"] = e.range.hi;
  j["exponent_range"]["empty"] = e.range.empty();
  if (!e.note.empty()) j["note"] = e.note;
  j["hirzebruch_applied"] = e.hirzebruch_applied;
  j["admissible"] = json::array();
  for (const Candidate& c : e.admissible) j["admissible"].push_back(cand(c));
  j["eliminated"] = json::array();
  for (const Elimination& el : e.eliminated) {
    json r = cand(el.cand);
    r["reason"] = el.reason;
    j["eliminated"].push_back(r);
  }
  j["open"] = e.open;
  return j;
}

}  // namespace nearfree
