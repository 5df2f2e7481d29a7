#pragma once
// SVG 1.1 rendering of an arrangement in the affine chart z = 1.
//
// Curves are sampled with double precision (cosmetic only; nothing here
// feeds back into the exact computations).  Singular-point markers are
// placed from certified algebraic-number approximations; complex points
// and points at infinity cannot be drawn and are listed textually inside
// the image instead.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "nearfree/arrangement.hpp"
#include "nearfree/errors.hpp"
#include "nearfree/rational.hpp"
#include "nearfree/singular.hpp"

namespace nearfree {

struct RenderOptions {
  double x0 = -8, y0 = -8, x1 = 8, y1 = 8;  // world window
  int px = 760;                             // canvas size (square)
};

namespace detail {

struct Canvas {
  RenderOptions opt;
  std::string body;

  double sx(double x) const { return (x - opt.x0) / (opt.x1 - opt.x0) * opt.px; }
  double sy(double y) const { return (opt.y1 - y) / (opt.y1 - opt.y0) * opt.px; }

  static std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const char* color) {
    if (pts.size() < 2) return;
    std::string d;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      d += (i == 0 ? "M" : "L");
      d += fmt(sx(pts[i].first)) + " " + fmt(sy(pts[i].second));
    }
    body += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
            "\" stroke-width=\"1.6\"/>\n";
  }

  void text(double px_x, double px_y, const std::string& s, const char* color = "#333") {
    std::string esc;
    for (char ch : s) {
      if (ch == '&')
        esc += "&amp;";
      else if (ch == '<')
        esc += "&lt;";
      else if (ch == '>')
        esc += "&gt;";
      else
        esc += ch;
    }
    body += "<text x=\"" + fmt(px_x) + "\" y=\"" + fmt(px_y) +
            "\" font-family=\"monospace\" font-size=\"11\" fill=\"" + std::string(color) +
            "\">" + esc + "</text>\n";
  }

  void marker(double x, double y, SingType t) {
    const double cx = sx(x), cy = sy(y);
    switch (t) {
      case SingType::node:
        body += "<circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) +
                "\" r=\"4.5\" fill=\"#111\"/>\n";
        break;
      case SingType::tacnode:
        body += "<rect x=\"" + fmt(cx - 4.5) + "\" y=\"" + fmt(cy - 4.5) +
                "\" width=\"9\" height=\"9\" fill=\"#c62828\"/>\n";
        break;
      case SingType::triple:
        body += "<polygon points=\"" + fmt(cx) + "," + fmt(cy - 5.5) + " " + fmt(cx - 5) +
                "," + fmt(cy + 4) + " " + fmt(cx + 5) + "," + fmt(cy + 4) +
                "\" fill=\"#2e7d32\"/>\n";
        break;
    }
  }
};

inline void draw_line(Canvas& cv, const LineSpec& l, std::vector<std::string>& notes,
                      std::size_t idx) {
  const double a = to_double(l.a), b = to_double(l.b), c = to_double(l.c);
  if (std::abs(a) < 1e-14 && std::abs(b) < 1e-14) {
    notes.push_back("line " + std::to_string(idx) + " is the line at infinity (not drawn)");
    return;
  }
  // Intersect a x + b y + c = 0 with the window rectangle.
  std::vector<std::pair<double, double>> pts;
  auto push = [&](double x, double y) {
    const double eps = 1e-9 * (std::abs(cv.opt.x1 - cv.opt.x0) + std::abs(cv.opt.y1 - cv.opt.y0));
    if (x < cv.opt.x0 - eps || x > cv.opt.x1 + eps || y < cv.opt.y0 - eps || y > cv.opt.y1 + eps)
      return;
    for (auto& p : pts)
      if (std::abs(p.first - x) < eps && std::abs(p.second - y) < eps) return;
    pts.emplace_back(x, y);
  };
  if (std::abs(b) > 1e-14) {
    push(cv.opt.x0, (-c - a * cv.opt.x0) / b);
    push(cv.opt.x1, (-c - a * cv.opt.x1) / b);
  }
  if (std::abs(a) > 1e-14) {
    push((-c - b * cv.opt.y0) / a, cv.opt.y0);
    push((-c - b * cv.opt.y1) / a, cv.opt.y1);
  }
  if (pts.size() >= 2) cv.polyline({pts[0], pts[1]}, "#1565c0");
}

inline void draw_conic(Canvas& cv, const ConicSpec& q, std::vector<std::string>& notes,
                       std::size_t idx) {
  // Affine form: A x^2 + B y^2 + D xy + E x + F y + C = 0.
  const double A = to_double(q.A), B = to_double(q.B), C = to_double(q.C);
  const double D = to_double(q.D), E = to_double(q.E), F = to_double(q.F);
  // Principal-axis rotation: x = cu - sv, y = su + cv.
  const double theta = 0.5 * std::atan2(D, A - B);
  const double cth = std::cos(theta), sth = std::sin(theta);
  const double l1 = A * cth * cth + D * cth * sth + B * sth * sth;
  const double l2 = A * sth * sth - D * cth * sth + B * cth * cth;
  const double e1 = E * cth + F * sth;
  const double f1 = -E * sth + F * cth;
  const double eps = 1e-12;

  auto emit = [&](const std::vector<std::pair<double, double>>& uv) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [u, v] : uv) {
      if (!std::isfinite(u) || !std::isfinite(v)) continue;
      pts.emplace_back(cth * u - sth * v, sth * u + cth * v);
    }
    cv.polyline(pts, "#e65100");
  };

  if (std::abs(l1) > eps && std::abs(l2) > eps) {
    const double u0 = -e1 / (2 * l1), v0 = -f1 / (2 * l2);
    const double rhs = e1 * e1 / (4 * l1) + f1 * f1 / (4 * l2) - C;
    const double r1 = rhs / l1, r2 = rhs / l2;
    if (r1 > eps && r2 > eps) {
      // Ellipse.
      std::vector<std::pair<double, double>> uv;
      const double su = std::sqrt(r1), sv = std::sqrt(r2);
      for (int i = 0; i <= 512; ++i) {
        const double ph = 2 * M_PI * i / 512;
        uv.emplace_back(u0 + su * std::cos(ph), v0 + sv * std::sin(ph));
      }
      emit(uv);
    } else if (r1 > eps && r2 < -eps) {
      // Hyperbola opening along u.
      const double su = std::sqrt(r1), sv = std::sqrt(-r2);
      for (int sign = -1; sign <= 1; sign += 2) {
        std::vector<std::pair<double, double>> uv;
        for (int i = 0; i <= 256; ++i) {
          const double t = -4.5 + 9.0 * i / 256;
          uv.emplace_back(u0 + sign * su * std::cosh(t), v0 + sv * std::sinh(t));
        }
        emit(uv);
      }
    } else if (r1 < -eps && r2 > eps) {
      const double su = std::sqrt(-r1), sv = std::sqrt(r2);
      for (int sign = -1; sign <= 1; sign += 2) {
        std::vector<std::pair<double, double>> uv;
        for (int i = 0; i <= 256; ++i) {
          const double t = -4.5 + 9.0 * i / 256;
          uv.emplace_back(u0 + su * std::sinh(t), v0 + sign * sv * std::cosh(t));
        }
        emit(uv);
      }
    } else {
      notes.push_back("conic " + std::to_string(idx) + " has no real points (not drawn)");
    }
    return;
  }
  // Parabolic case: one eigenvalue ~ 0.
  const bool l1_main = std::abs(l1) > eps;
  const double lq = l1_main ? l1 : l2;      // quadratic direction
  const double lin = l1_main ? f1 : e1;     // linear coefficient of the other axis
  const double loff = l1_main ? e1 : f1;    // linear coefficient of the quadratic axis
  if (std::abs(lq) < eps || std::abs(lin) < eps) {
    notes.push_back("conic " + std::to_string(idx) +
                    " could not be sampled in this chart (not drawn)");
    return;
  }
  const double span = 2.5 * (std::abs(cv.opt.x1 - cv.opt.x0) + std::abs(cv.opt.y1 - cv.opt.y0));
  std::vector<std::pair<double, double>> uv;
  for (int i = 0; i <= 512; ++i) {
    const double w = -span + 2 * span * i / 512;
    const double other = -(lq * w * w + loff * w + C) / lin;
    uv.emplace_back(l1_main ? w : other, l1_main ? other : w);
  }
  emit(uv);
}

}  // namespace detail

// Renders the arrangement; `sing` may be null (curves only, no markers).
inline std::string render_svg(const Arrangement& arr, const RenderOptions& opt,
                              const SingularAnalysis* sing,
                              const std::string& headline = "") {
  if (!(opt.x0 < opt.x1) || !(opt.y0 < opt.y1) || opt.px < 64)
    throw UndefinedInputError("render window is degenerate");
  detail::Canvas cv;
  cv.opt = opt;
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < arr.lines.size(); ++i) detail::draw_line(cv, arr.lines[i], notes, i);
  for (std::size_t i = 0; i < arr.conics.size(); ++i)
    detail::draw_conic(cv, arr.conics[i], notes, i);

  if (sing) {
    for (const SingPoint& s : sing->points) {
      if (!point_is_real(s.point)) {
        notes.push_back(std::string(sing_type_str(s.type)) + " at " + proj_point_str(s.point) +
                        " (complex, not drawn)");
        continue;
      }
      const AlgNum& z = s.point.c[2];
      const bool at_infinity = z.is_rational() && z.rational_value() == 0;
      if (at_infinity) {
        notes.push_back(std::string(sing_type_str(s.type)) + " at " + proj_point_str(s.point) +
                        " (at infinity, not drawn)");
        continue;
      }
      const double zx = s.point.c[0].approx(60).first;
      const double zy = s.point.c[1].approx(60).first;
      const double zz = s.point.c[2].approx(60).first;
      cv.marker(zx / zz, zy / zz, s.type);
    }
  } else {
    notes.push_back("singular points unavailable; markers omitted");
  }

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(opt.px) + "\" height=\"" + std::to_string(opt.px + 18 * (int)notes.size() + 30) +
         "\" viewBox=\"0 0 " + std::to_string(opt.px) + " " +
         std::to_string(opt.px + 18 * (int)notes.size() + 30) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  // Frame and axes.
  svg += "<rect x=\"0.5\" y=\"0.5\" width=\"" + detail::Canvas::fmt(opt.px - 1) + "\" height=\"" +
         detail::Canvas::fmt(opt.px - 1) + "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  if (opt.x0 < 0 && opt.x1 > 0) {
    const double ax = cv.sx(0);
    svg += "<line x1=\"" + detail::Canvas::fmt(ax) + "\" y1=\"0\" x2=\"" +
           detail::Canvas::fmt(ax) + "\" y2=\"" + std::to_string(opt.px) +
           "\" stroke=\"#ddd\"/>\n";
  }
  if (opt.y0 < 0 && opt.y1 > 0) {
    const double ay = cv.sy(0);
    svg += "<line x1=\"0\" y1=\"" + detail::Canvas::fmt(ay) + "\" x2=\"" +
           std::to_string(opt.px) + "\" y2=\"" + detail::Canvas::fmt(ay) +
           "\" stroke=\"#ddd\"/>\n";
  }
  if (!headline.empty()) cv.text(8, 16, headline, "#000");
  double ty = opt.px + 20;
  for (const std::string& n : notes) {
    cv.text(8, ty, n, "#555");
    ty += 18;
  }
  svg += cv.body;
  svg += "</svg>\n";
  return svg;
}

}  // namespace nearfree
