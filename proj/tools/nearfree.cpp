// nearfree: exact near-freeness analysis of conic-line arrangements.
//
// Subcommands:
//   analyze <file> [--json]
//       Parse an arrangement, locate and classify its singular points,
//       compute mdr(f) and the total Tjurina number, and decide whether
//       the curve is free / nearly free.
//   enumerate --degree M [--nearly-free | --count-only] [--json]
//       List weak combinatorics (d, k; n2, t, n3) of degree M.  By default
//       (and with --count-only) rows are constrained only by the incidence
//       tally n2 + 2t + 3n3 = C(M,2) - k; with --nearly-free the rows are
//       further filtered by the nearly-free constraints, with eliminations
//       explained and certificates printed.
//   render <file> -o out.svg [--window x0,y0,x1,y1] [--size N]
//       Draw the arrangement with classified singular points marked.
//   bound [--json]
//       Report the degree bound and the per-degree candidate counts.
//
// Exit codes: 0 success; 2 unsupported singularity type; 3 internal
// inconsistency (invariant cross-checks failed); 4 invalid input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nearfree/arrangement_json.hpp"
#include "nearfree/combinat.hpp"
#include "nearfree/errors.hpp"
#include "nearfree/report.hpp"
#include "nearfree/svg.hpp"

namespace {

int run_analyze(const std::string& file, bool json) {
  nearfree::Arrangement arr = nearfree::parse_arrangement_file(file);
  nearfree::AnalysisReport rep = nearfree::analyze(arr);
  if (json) {
    std::cout << nearfree::report_json(rep).dump(2) << "\n";
  } else {
    std::cout << nearfree::report_text(rep);
  }
  return 0;
}

int run_enumerate(int degree, bool nearly_free_only, bool json) {
  if (degree < 3)
    throw nearfree::UnsupportedDegreeError("enumerate: degree must be at least 3 (got " +
                                           std::to_string(degree) + ")");
  const int cap = nearfree::degree_upper_bound();
  if (degree > cap) {
    const nearfree::ExponentRange r = nearfree::exponent_range(degree);
    throw nearfree::UnsupportedDegreeError(
        "degree " + std::to_string(degree) + " exceeds the bound " + std::to_string(cap) +
        ": ceil(2m/3 - 2) = " + std::to_string(r.lo) + " > " + std::to_string(r.hi) +
        " = floor(m/2), so the exponent interval is empty and no nearly free "
        "conic-line arrangement of this degree exists in scope");
  }
  if (nearly_free_only) {
    nearfree::EnumerationResult e = nearfree::nearly_free_candidates(degree);
    if (json) {
      std::cout << nearfree::enumeration_json(e).dump(2) << "\n";
    } else {
      std::cout << nearfree::enumeration_text(e);
    }
  } else {
    const std::vector<nearfree::Candidate> rows = nearfree::count_admissible(degree);
    if (json) {
      std::cout << nearfree::count_table_json(degree, rows).dump(2) << "\n";
    } else {
      std::cout << nearfree::count_table_text(degree, rows);
    }
  }
  return 0;
}

int run_render(const std::string& file, const std::string& out, const std::string& window,
               int size) {
  nearfree::Arrangement arr = nearfree::parse_arrangement_file(file);
  {
    nearfree::ValidationReport vr = nearfree::validate(arr);
    if (!vr.ok())
      throw nearfree::InvalidArrangementError("invalid arrangement: " +
                                              vr.issues.front().message);
  }
  nearfree::RenderOptions opt;
  opt.px = size;
  if (!window.empty()) {
    double x0, y0, x1, y1;
    if (std::sscanf(window.c_str(), "%lf,%lf,%lf,%lf", &x0, &y0, &x1, &y1) != 4)
      throw nearfree::ParseError("--window expects x0,y0,x1,y1");
    opt.x0 = x0;
    opt.y0 = y0;
    opt.x1 = x1;
    opt.y1 = y1;
  }
  if (!(opt.x0 < opt.x1) || !(opt.y0 < opt.y1))
    throw nearfree::ParseError("--window is degenerate: need x0 < x1 and y0 < y1");

  // Classification failures downgrade to a marker-free drawing.
  const nearfree::SingularAnalysis* sing_ptr = nullptr;
  nearfree::SingularAnalysis sing;
  std::string note;
  try {
    sing = nearfree::analyze_singularities(arr);
    sing_ptr = &sing;
  } catch (const nearfree::Error& e) {
    note = e.what();
  } catch (const nearfree::InternalError& e) {
    note = e.what();
  }
  std::string headline = file;
  const std::size_t slash = headline.find_last_of('/');
  if (slash != std::string::npos) headline = headline.substr(slash + 1);
  if (!note.empty()) {
    std::cerr << "warning: singular points not classified (" << note
              << "); rendering curves only\n";
    headline += "  [singular points not classified]";
  }
  const std::string svg = nearfree::render_svg(arr, opt, sing_ptr, headline);
  std::ofstream f(out, std::ios::binary);
  if (!f) throw nearfree::ParseError("cannot open output file: " + out);
  f << svg;
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_bound(bool json) {
  const int cap = nearfree::degree_upper_bound();
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["schema"] = 1;
    j["degree_bound"] = cap;
    j["degrees"] = nlohmann::ordered_json::array();
    for (int m = 3; m <= cap; ++m) {
      nearfree::EnumerationResult e = nearfree::nearly_free_candidates(m);
      nlohmann::ordered_json row = nlohmann::ordered_json::object();
      row["m"] = m;
      row["admissible"] = e.admissible.size();
      row["eliminated"] = e.eliminated.size();
      row["open"] = e.open;
      if (!e.note.empty()) row["note"] = e.note;
      j["degrees"].push_back(row);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "maximum degree admitting nearly free candidates: " << cap << "\n";
  std::cout << "(for every m > " << cap
            << " the exponent interval [ceil(2m/3)-2, floor(m/2)] is empty)\n";
  for (int m = 3; m <= cap; ++m) {
    nearfree::EnumerationResult e = nearfree::nearly_free_candidates(m);
    std::cout << "  m = " << m << ": " << e.admissible.size() << " admissible";
    if (!e.eliminated.empty()) std::cout << ", " << e.eliminated.size() << " eliminated";
    if (e.open) std::cout << "  [realizability OPEN]";
    if (!e.note.empty()) std::cout << "  (" << e.note << ")";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact near-freeness analysis of conic-line arrangements"};
  app.require_subcommand(1);

  auto* an = app.add_subcommand("analyze", "analyze one arrangement from a JSON file");
  std::string an_file;
  bool an_json = false;
  an->add_option("file", an_file, "arrangement JSON file")->required();
  an->add_flag("--json", an_json, "emit a JSON report");

  auto* en = app.add_subcommand("enumerate", "enumerate admissible weak combinatorics");
  int en_degree = 0;
  bool en_nf = false, en_count = false, en_json = false;
  en->add_option("--degree,-m", en_degree, "arrangement degree (lines + 2*conics)")->required();
  auto* en_nf_flag = en->add_flag(
      "--nearly-free", en_nf,
      "filter rows by the nearly-free constraints; print eliminations and certificates");
  auto* en_count_flag = en->add_flag(
      "--count-only", en_count,
      "apply only the incidence tally n2 + 2t + 3n3 = C(m,2) - k (the default lane)");
  en_nf_flag->excludes(en_count_flag);
  en->add_flag("--json", en_json, "emit JSON");

  auto* re = app.add_subcommand("render", "render an arrangement to SVG");
  std::string re_file, re_out, re_window;
  int re_size = 760;
  re->add_option("file", re_file, "arrangement JSON file")->required();
  re->add_option("-o,--output", re_out, "output SVG path")->required();
  re->add_option("--window", re_window, "world window as x0,y0,x1,y1 (default -8,-8,8,8)");
  re->add_option("--size", re_size, "canvas size in pixels (default 760)");

  auto* bo = app.add_subcommand("bound", "degree bound and per-degree candidate counts");
  bool bo_json = false;
  bo->add_flag("--json", bo_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (an->parsed()) return run_analyze(an_file, an_json);
    if (en->parsed()) return run_enumerate(en_degree, en_nf, en_json);
    if (re->parsed()) return run_render(re_file, re_out, re_window, re_size);
    if (bo->parsed()) return run_bound(bo_json);
    std::cerr << "error: no subcommand\n";
    return 4;
  } catch (const nearfree::UnsupportedSingularityError& e) {
    std::cerr << "error (unsupported singularity): " << e.what() << "\n";
    return 2;
  } catch (const nearfree::ParseError& e) {
    std::cerr << "error (parse): " << e.what() << "\n";
    return 4;
  } catch (const nearfree::InvalidArrangementError& e) {
    std::cerr << "error (invalid arrangement): " << e.what() << "\n";
    return 4;
  } catch (const nearfree::UnsupportedDegreeError& e) {
    std::cerr << "error (unsupported degree): " << e.what() << "\n";
    return 4;
  } catch (const nearfree::UndefinedInputError& e) {
    std::cerr << "error (undefined input): " << e.what() << "\n";
    return 4;
  } catch (const nearfree::InternalError& e) {
    std::cerr << "error (internal inconsistency): " << e.what() << "\n";
    return 3;
  } catch (const nearfree::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error (unexpected): " << e.what() << "\n";
    return 3;
  }
}
