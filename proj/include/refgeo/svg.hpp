#pragma once

// Deterministic SVG drawings of planar refined figures.
//
// Closures are drawn as polygons. Boundary occupation follows the usual
// diagram conventions: a half-disk on each edge, bulging to the side the
// figure occupies, and a sector at each vertex spanning the occupied angle.
// Exact coordinates are rounded only here (default 9 decimals).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "refgeo/wbg.hpp"

namespace refgeo::svg {

struct Point {
  double x = 0, y = 0;
};

inline std::string number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

template <OrderedField F>
struct Layer {
  RefinedPolytope<F> figure;
  std::string color = "#3b6ea5";
  std::string label;
};

class Canvas {
 public:
  explicit Canvas(int digits = 9) : digits_(digits) {}

  void include(Point p) {
    if (empty_) {
      lo_ = hi_ = p;
      empty_ = false;
    }
    lo_.x = std::min(lo_.x, p.x);
    lo_.y = std::min(lo_.y, p.y);
    hi_.x = std::max(hi_.x, p.x);
    hi_.y = std::max(hi_.y, p.y);
  }

  double extent() const { return empty_ ? 1.0 : std::max({hi_.x - lo_.x, hi_.y - lo_.y, 1e-9}); }
  Point low() const { return lo_; }
  Point high() const { return hi_; }

  // y is flipped so that drawings read in the usual orientation.
  std::string pt(Point p) const { return number(p.x, digits_) + "," + number(-p.y, digits_); }

  std::string polygon(const std::vector<Point>& pts, const std::string& attrs) const {
    std::string s = "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + pt(pts[i]);
    return s + "\" " + attrs + "/>\n";
  }

  std::string line(Point a, Point b, const std::string& attrs) const {
    return "<line x1=\"" + number(a.x, digits_) + "\" y1=\"" + number(-a.y, digits_) + "\" x2=\"" +
           number(b.x, digits_) + "\" y2=\"" + number(-b.y, digits_) + "\" " + attrs + "/>\n";
  }

  std::string circle(Point c, double r, const std::string& attrs) const {
    return "<circle cx=\"" + number(c.x, digits_) + "\" cy=\"" + number(-c.y, digits_) + "\" r=\"" +
           number(r, digits_) + "\" " + attrs + "/>\n";
  }

  std::string text(Point p, const std::string& body, double size) const {
    return "<text x=\"" + number(p.x, digits_) + "\" y=\"" + number(-p.y, digits_) + "\" font-size=\"" +
           number(size, digits_) + "\" font-family=\"sans-serif\">" + body + "</text>\n";
  }

  std::string document(const std::string& body) const {
    double e = extent(), m = 0.12 * e;
    double x = (empty_ ? 0 : lo_.x) - m, y = -(empty_ ? 0 : hi_.y) - m;
    double w = (empty_ ? 0 : hi_.x - lo_.x) + 2 * m, h = (empty_ ? 0 : hi_.y - lo_.y) + 2 * m;
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + number(x, digits_) + " " + number(y, digits_) +
           " " + number(w, digits_) + " " + number(h, digits_) + "\" width=\"640\" height=\"" +
           number(640 * h / w, 0) + "\">\n" + body + "</svg>\n";
  }

  int digits() const { return digits_; }

 private:
  int digits_;
  bool empty_ = true;
  Point lo_, hi_;
};

namespace detail {

template <OrderedField F>
Point to_point(const Vector<F>& v) {
  return {to_double(v[0]), v.size() > 1 ? to_double(v[1]) : 0.0};
}

inline Point add(Point a, Point b, double s = 1) { return {a.x + s * b.x, a.y + s * b.y}; }
inline Point unit(Point a, Point b) {
  double dx = b.x - a.x, dy = b.y - a.y, n = std::hypot(dx, dy);
  return n > 0 ? Point{dx / n, dy / n} : Point{1, 0};
}

/// Arc samples from direction angle t0 counterclockwise to t1 (radians).
inline std::vector<Point> arc(Point c, double r, double t0, double t1, int steps = 12) {
  while (t1 < t0) t1 += 2 * M_PI;
  std::vector<Point> out;
  for (int i = 0; i <= steps; ++i) {
    double t = t0 + (t1 - t0) * i / steps;
    out.push_back({c.x + r * std::cos(t), c.y + r * std::sin(t)});
  }
  return out;
}

template <OrderedField F>
std::vector<std::vector<Point>> cell_outlines(const RefinedPolytope<F>& p) {
  std::vector<std::vector<Point>> out;
  for (const auto& c : p.cells()) {
    std::vector<Point> pts;
    for (const auto& v : refgeo::detail::cell_vertices(c)) pts.push_back(to_point(v));
    out.push_back(pts);
  }
  return out;
}

}  // namespace detail

/// Body of one figure: closures, edge half-disks and vertex sectors.
template <OrderedField F>
std::string figure(const Canvas& cv, const RefinedPolytope<F>& p, const std::string& color, double r,
                   Point shift = {}) {
  if (p.ambient_dim() != 2) throw DimensionMismatch("drawings are planar");
  std::string s = "<g>\n";
  const std::string fill = "fill=\"" + color + "\"";
  const std::string glyph = "fill=\"" + color + "\" fill-opacity=\"0.85\" stroke=\"none\"";
  const double sw = r / 6;
  for (auto pts : detail::cell_outlines(p)) {
    for (auto& q : pts) q = detail::add(q, shift);
    if (pts.size() == 1) {
      s += cv.circle(pts[0], r / 2, glyph);
      continue;
    }
    if (pts.size() == 2) {
      s += cv.line(pts[0], pts[1], "stroke=\"" + color + "\" stroke-width=\"" + number(sw, cv.digits()) + "\"");
      for (int e = 0; e < 2; ++e) {
        Point a = pts[e], t = detail::unit(a, pts[1 - e]);
        double th = std::atan2(t.y, t.x);
        auto half = detail::arc(a, r, th - M_PI / 2, th + M_PI / 2);
        s += cv.polygon(half, glyph);
      }
      continue;
    }
    s += cv.polygon(pts, fill + " fill-opacity=\"0.3\" stroke=\"" + color + "\" stroke-width=\"" +
                             number(sw, cv.digits()) + "\"");
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
      Point a = pts[i], b = pts[(i + 1) % n], prev = pts[(i + n - 1) % n];
      // Edge half-disk on the inner (left) side of the ccw boundary.
      Point t = detail::unit(a, b);
      Point m{(a.x + b.x) / 2, (a.y + b.y) / 2};
      double th = std::atan2(t.y, t.x);
      s += cv.polygon(detail::arc(m, r, th, th + M_PI), glyph);
      // Vertex sector from the outgoing edge to the incoming one.
      Point u = detail::unit(a, b), w = detail::unit(a, prev);
      auto sector = detail::arc(a, r, std::atan2(u.y, u.x), std::atan2(w.y, w.x));
      sector.insert(sector.begin(), a);
      s += cv.polygon(sector, glyph);
    }
  }
  return s + "</g>\n";
}

template <OrderedField F>
std::string render(const std::vector<Layer<F>>& layers, int digits = 9) {
  Canvas cv(digits);
  for (const auto& l : layers)
    for (const auto& pts : detail::cell_outlines(l.figure))
      for (const auto& q : pts) cv.include(q);
  double r = 0.025 * cv.extent();
  std::string body;
  for (const auto& l : layers) {
    body += figure(cv, l.figure, l.color, r);
    if (!l.label.empty()) {
      auto outlines = detail::cell_outlines(l.figure);
      if (!outlines.empty() && !outlines.front().empty()) {
        Point c;
        for (const auto& q : outlines.front()) c = detail::add(c, q, 1.0 / outlines.front().size());
        body += cv.text(c, l.label, 3 * r);
      }
    }
  }
  return cv.document(body);
}

/// Deterministic distinct colours for paired pieces (golden-angle hues).
inline std::string palette(std::size_t i) {
  double h = std::fmod(i * 137.508, 360.0) / 60.0, s = 0.65, l = 0.5;
  double c = (1 - std::fabs(2 * l - 1)) * s, x = c * (1 - std::fabs(std::fmod(h, 2.0) - 1)), m = l - c / 2;
  double rgb[3] = {0, 0, 0};
  int sector = static_cast<int>(h);
  const int order[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 0, 1}, {2, 1, 0}, {1, 2, 0}, {0, 2, 1}};
  rgb[order[sector][0]] = c;
  rgb[order[sector][1]] = x;
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(std::lround((rgb[0] + m) * 255)),
                static_cast<int>(std::lround((rgb[1] + m) * 255)), static_cast<int>(std::lround((rgb[2] + m) * 255)));
  return buf;
}

/// Both figures side by side, paired pieces in the same colour.
template <OrderedField F>
std::string render_decomposition(const Decomposition<F>& d, int digits = 9) {
  Canvas left(digits), right(digits);
  for (const auto& p : d.pieces_p)
    for (const auto& pts : detail::cell_outlines(p))
      for (const auto& q : pts) left.include(q);
  for (const auto& p : d.pieces_q)
    for (const auto& pts : detail::cell_outlines(p))
      for (const auto& q : pts) right.include(q);
  Canvas cv(digits);
  Point shift{left.high().x - right.low().x + 0.3 * std::max(left.extent(), right.extent()), 0};
  if (!d.pieces_p.empty()) {
    cv.include(left.low());
    cv.include(left.high());
  }
  if (!d.pieces_q.empty()) {
    cv.include(detail::add(right.low(), shift));
    cv.include(detail::add(right.high(), shift));
  }
  double r = 0.012 * cv.extent();
  std::string body;
  for (std::size_t i = 0; i < d.size(); ++i) {
    body += figure(cv, d.pieces_p[i], palette(i), r);
    body += figure(cv, d.pieces_q[i], palette(i), r, shift);
  }
  return cv.document(body);
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("cannot write " + path);
}

}  // namespace refgeo::svg
