#pragma once
// Strict JSON input format for arrangements:
//
//   {
//     "lines":  [[a, b, c], ...],                 // a x + b y + c z
//     "conics": [[A, B, C, D, E, F], ...]         // A x^2 + B y^2 + C z^2
//   }                                             //  + D xy + E xz + F yz
//
// Coefficients are JSON integers or exact fraction strings "p/q" with a
// positive denominator.  Floating point numbers, unknown keys, and
// malformed fractions are rejected outright: inputs are exact or invalid.

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "nearfree/arrangement.hpp"
#include "nearfree/errors.hpp"
#include "nearfree/rational.hpp"

namespace nearfree {

namespace detail {

inline Rat json_to_rat(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer() && !v.is_number_unsigned())
    return Rat(Int(v.get<long long>()));
  if (v.is_number_unsigned()) return Rat(Int(v.get<unsigned long long>()));
  if (v.is_number_float())
    throw ParseError(where + ": floating point numbers are not accepted; use an integer or an "
                             "exact fraction string \"p/q\"");
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a fraction string");
}

}  // namespace detail

inline Arrangement parse_arrangement_json(const std::string& text) {
  nlohmann::json root = nlohmann::json::parse(text, nullptr, false);
  if (root.is_discarded()) throw ParseError("input is not valid JSON");
  if (!root.is_object()) throw ParseError("top-level JSON value must be an object");
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (key != "lines" && key != "conics")
      throw ParseError("unknown key \"" + key + "\" (allowed: \"lines\", \"conics\")");
  }
  Arrangement a;
  if (root.contains("lines")) {
    const auto& ls = root["lines"];
    if (!ls.is_array()) throw ParseError("\"lines\" must be an array");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const auto& l = ls[i];
      const std::string where = "lines[" + std::to_string(i) + "]";
      if (!l.is_array() || l.size() != 3)
        throw ParseError(where + ": expected [a, b, c]");
      a.lines.push_back(LineSpec{detail::json_to_rat(l[0], where + "[0]"),
                                 detail::json_to_rat(l[1], where + "[1]"),
                                 detail::json_to_rat(l[2], where + "[2]")});
    }
  }
  if (root.contains("conics")) {
    const auto& cs = root["conics"];
    if (!cs.is_array()) throw ParseError("\"conics\" must be an array");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& c = cs[i];
      const std::string where = "conics[" + std::to_string(i) + "]";
      if (!c.is_array() || c.size() != 6)
        throw ParseError(where + ": expected [A, B, C, D, E, F]");
      ConicSpec q;
      Rat* slots[6] = {&q.A, &q.B, &q.C, &q.D, &q.E, &q.F};
      for (int j = 0; j < 6; ++j)
        *slots[j] = detail::json_to_rat(c[static_cast<std::size_t>(j)],
                                        where + "[" + std::to_string(j) + "]");
      a.conics.push_back(q);
    }
  }
  return a;
}

inline Arrangement parse_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open arrangement file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement_json(buf.str());
}

inline std::string serialize_arrangement(const Arrangement& a) {
  using json = nlohmann::ordered_json;
  auto emit = [](const Rat& r) {
    json v;
    const Int n = num(r), d = den(r);
    if (d == 1 && iabs(n) <= Int(std::numeric_limits<long long>::max())) {
      v = static_cast<long long>(n);
    } else {
      v = rat_str(r);
    }
    return v;
  };
  json root = json::object();
  root["lines"] = json::array();
  for (const LineSpec& l : a.lines) root["lines"].push_back(json::array({emit(l.a), emit(l.b), emit(l.c)}));
  root["conics"] = json::array();
  for (const ConicSpec& q : a.conics)
    root["conics"].push_back(
        json::array({emit(q.A), emit(q.B), emit(q.C), emit(q.D), emit(q.E), emit(q.F)}));
  return root.dump(2) + "\n";
}

}  // namespace nearfree
