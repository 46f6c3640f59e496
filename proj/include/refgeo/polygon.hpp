#pragma once

// Planar helpers: exact orientation predicates, simple polygons, ear clipping,
// vertex enumeration of bounded planar cells and areas.

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "refgeo/algebra.hpp"

namespace refgeo {

template <OrderedField F>
using Polygon = std::vector<Vector<F>>;

template <OrderedField F>
F cross(const Vector<F>& a, const Vector<F>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

/// Sign of the turn a → b → c: +1 left, -1 right, 0 collinear.
template <OrderedField F>
int orient(const Vector<F>& a, const Vector<F>& b, const Vector<F>& c) {
  return sign(cross(b - a, c - a));
}

template <OrderedField F>
F signed_area(const Polygon<F>& poly) {
  F s(0);
  for (std::size_t i = 0; i < poly.size(); ++i) s = s + cross(poly[i], poly[(i + 1) % poly.size()]);
  return s / F(2);
}

template <OrderedField F>
Polygon<F> remove_collinear(Polygon<F> poly) {
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& prev = poly[(i + poly.size() - 1) % poly.size()];
      const auto& next = poly[(i + 1) % poly.size()];
      if (poly[i] == next || orient(prev, poly[i], next) == 0) {
        poly.erase(poly.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return poly;
}

namespace detail {

template <OrderedField F>
bool on_segment(const Vector<F>& p, const Vector<F>& a, const Vector<F>& b) {
  if (orient(a, b, p) != 0) return false;
  return sign(dot(p - a, p - b)) <= 0;
}

template <OrderedField F>
bool segments_touch(const Vector<F>& a, const Vector<F>& b, const Vector<F>& c, const Vector<F>& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

}  // namespace detail

/// Simple: at least three vertices, nonzero area, and edges meet only at
/// shared endpoints of consecutive edges.
template <OrderedField F>
bool is_simple(const Polygon<F>& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (const auto& v : poly)
    if (v.size() != 2) throw DimensionMismatch("polygon vertices must be planar");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (poly[i] == poly[j]) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& c = poly[j];
      const auto& d = poly[(j + 1) % n];
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (!adjacent) {
        if (detail::segments_touch(a, b, c, d)) return false;
        continue;
      }
      // Consecutive edges share one endpoint; they must not fold back.
      const auto& shared = j == i + 1 ? b : a;
      const auto& p = j == i + 1 ? a : b;
      const auto& q = j == i + 1 ? d : c;
      if (orient(p, shared, q) == 0 && sign(dot(p - shared, q - shared)) > 0) return false;
    }
  }
  return sign(signed_area(poly)) != 0;
}

template <OrderedField F>
Polygon<F> make_ccw(Polygon<F> poly) {
  if (sign(signed_area(poly)) < 0) std::reverse(poly.begin(), poly.end());
  return poly;
}

template <OrderedField F>
using Triangle = std::array<Vector<F>, 3>;

/// Ear clipping of a simple polygon into counter-clockwise triangles. Ears are
/// taken at the lowest index first, and straight vertices are dropped as they
/// appear, so the output is deterministic.
template <OrderedField F>
std::vector<Triangle<F>> ear_clip(const Polygon<F>& input) {
  if (!is_simple(input)) throw NonSimplePolygon("polygon is not simple");
  Polygon<F> poly = remove_collinear(make_ccw(input));
  std::vector<Triangle<F>> out;
  while (poly.size() > 3) {
    const std::size_t n = poly.size();
    bool clipped = false;
    for (std::size_t i = 0; i < n && !clipped; ++i) {
      const auto& a = poly[(i + n - 1) % n];
      const auto& b = poly[i];
      const auto& c = poly[(i + 1) % n];
      if (orient(a, b, c) <= 0) continue;
      bool blocked = false;
      for (std::size_t j = 0; j < n && !blocked; ++j) {
        if (j == i || j == (i + 1) % n || j == (i + n - 1) % n) continue;
        const auto& p = poly[j];
        blocked = orient(a, b, p) >= 0 && orient(b, c, p) >= 0 && orient(c, a, p) >= 0;
      }
      if (blocked) continue;
      out.push_back({a, b, c});
      poly.erase(poly.begin() + static_cast<long>(i));
      poly = remove_collinear(std::move(poly));
      clipped = true;
    }
    if (!clipped) throw NonSimplePolygon("ear clipping found no ear");
  }
  if (poly.size() == 3) out.push_back({poly[0], poly[1], poly[2]});
  return out;
}

/// ξ(x) = cross(b − a, x − a): positive to the left of a → b.
template <OrderedField F>
AffineFunctional<F> left_of(const Vector<F>& a, const Vector<F>& b) {
  Vector<F> e = b - a;
  return {Vector<F>{-e[1], e[0]}, e[1] * a[0] - e[0] * a[1]};
}

/// Closed convex polygon from its vertices (any orientation).
template <OrderedField F>
ConvexPiece<F> convex_piece(const Polygon<F>& vertices) {
  Polygon<F> poly = make_ccw(vertices);
  ConvexPiece<F> piece{Carrier<F>::whole(2), {}};
  for (std::size_t i = 0; i < poly.size(); ++i) piece.constraints.push_back(left_of(poly[i], poly[(i + 1) % poly.size()]));
  return piece;
}

template <OrderedField F>
bool is_convex(const Polygon<F>& vertices) {
  Polygon<F> poly = make_ccw(vertices);
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i)
    if (orient(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) < 0) return false;
  return true;
}

template <OrderedField F>
RefinedPolytope<F> triangle_polytope(const Vector<F>& a, const Vector<F>& b, const Vector<F>& c) {
  return lift(convex_piece(Polygon<F>{a, b, c}), 2);
}

/// Refined image of a simple polygon: a single cell when convex, otherwise the
/// union of its ear-clipping triangles.
template <OrderedField F>
RefinedPolytope<F> polygon_polytope(const Polygon<F>& poly) {
  if (!is_simple(poly)) throw NonSimplePolygon("polygon is not simple");
  if (is_convex(poly)) return lift(convex_piece(poly), 2);
  ConventionalPolytope<F> c{2, 2, {}};
  for (const auto& t : ear_clip(poly)) c.pieces.push_back(convex_piece(Polygon<F>{t[0], t[1], t[2]}));
  return lift(c);
}

/// Segment [a, b] as a refined 1-polytope in the plane.
template <OrderedField F>
RefinedPolytope<F> segment_polytope(const Vector<F>& a, const Vector<F>& b) {
  Carrier<F> line(a, {b - a});
  auto ta = line.coords(a), tb = line.coords(b);
  const F& lo = (*ta)[0];
  const F& hi = (*tb)[0];
  ConvexPiece<F> piece{line, {}};
  if (lo < hi) {
    piece.constraints.push_back({Vector<F>{F(1)}, -lo});
    piece.constraints.push_back({Vector<F>{F(-1)}, hi});
  } else {
    piece.constraints.push_back({Vector<F>{F(-1)}, lo});
    piece.constraints.push_back({Vector<F>{F(1)}, -hi});
  }
  return lift(piece, 1);
}

/// The recession cone of the closure is {0}.
template <OrderedField F>
bool is_bounded(const ConvexPiece<F>& piece) {
  std::vector<AffineFunctional<F>> cone;
  for (const auto& f : piece.constraints) cone.push_back({f.linear, F(0)});
  return weak_system_dimension(cone, piece.carrier.dim()) == 0;
}

template <OrderedField F>
bool is_bounded(const RefinedPolytope<F>& p) {
  for (const auto& c : p.cells())
    if (!is_bounded(c.closure())) return false;
  return true;
}

/// Counter-clockwise order around the vertex centroid, starting from the
/// direction of the positive x axis.
template <OrderedField F>
void sort_ccw(Polygon<F>& pts) {
  if (pts.size() < 3) return;
  Vector<F> c(2);
  for (const auto& p : pts) c += p;
  c = c / F(static_cast<long>(pts.size()));
  auto upper = [&](const Vector<F>& p) {
    int dy = sign(p[1] - c[1]);
    return dy > 0 || (dy == 0 && sign(p[0] - c[0]) > 0);
  };
  std::sort(pts.begin(), pts.end(), [&](const Vector<F>& a, const Vector<F>& b) {
    bool ua = upper(a), ub = upper(b);
    if (ua != ub) return ua;
    return sign(cross(a - c, b - c)) > 0;
  });
}

/// Vertices of a bounded planar convex piece (ambient dimension 2): a ccw
/// polygon for full-dimensional pieces, two endpoints for segments, one point
/// for a 0-dimensional carrier.
template <OrderedField F>
Polygon<F> piece_vertices(const ConvexPiece<F>& piece) {
  if (piece.carrier.ambient_dim() != 2) throw DimensionMismatch("vertex enumeration is planar only");
  const std::size_t k = piece.carrier.dim();
  if (k == 0) return {piece.carrier.base()};
  std::vector<Vector<F>> found;
  auto keep = [&](const Vector<F>& t) {
    for (const auto& f : piece.constraints)
      if (sign(f(t)) < 0) return;
    Vector<F> x = piece.carrier.embed(t);
    if (std::find(found.begin(), found.end(), x) == found.end()) found.push_back(std::move(x));
  };
  const auto& fs = piece.constraints;
  if (k == 1) {
    for (const auto& f : fs) keep(Vector<F>{-f.constant / f.linear[0]});
    return found;
  }
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      F det = cross(fs[i].linear, fs[j].linear);
      if (sign(det) == 0) continue;
      // Cramer on a·t = −c.
      F x = (-fs[i].constant * fs[j].linear[1] + fs[j].constant * fs[i].linear[1]) / det;
      F y = (-fs[j].constant * fs[i].linear[0] + fs[i].constant * fs[j].linear[0]) / det;
      keep(Vector<F>{x, y});
    }
  sort_ccw(found);
  return found;
}

template <OrderedField F>
F convex_area(const ConvexPiece<F>& piece) {
  if (piece.carrier.dim() < 2) return F(0);
  return abs_value(signed_area(piece_vertices(piece)));
}

/// Cells of P rearranged into pairwise disjoint cells with the same union.
template <OrderedField F>
RefinedPolytope<F> disjointify(const RefinedPolytope<F>& p) {
  RefinedPolytope<F> acc(p.rank(), p.ambient_dim());
  for (const auto& c : p.cells()) {
    auto fresh = difference(RefinedPolytope<F>::from_cell(c), acc);
    acc = unite(acc, fresh);
  }
  return acc;
}

/// Exact area of the closure of a bounded refined 2-polytope in the plane.
template <OrderedField F>
F area(const RefinedPolytope<F>& p) {
  if (p.rank() != 2 || p.ambient_dim() != 2) throw RankMismatch("area needs a refined 2-polytope in the plane");
  if (!is_bounded(p)) throw UnboundedError("area of an unbounded polytope");
  F total(0);
  const auto parts = disjointify(p);
  for (const auto& c : parts.cells()) total = total + convex_area(c.closure());
  return total;
}

/// Vertex list of a single-cell bounded refined polygon.
template <OrderedField F>
Polygon<F> polygon_vertices(const RefinedPolytope<F>& p) {
  if (p.cells().size() != 1) throw DegenerateInput("expected a convex refined polygon");
  return piece_vertices(p.cells().front().closure());
}

}  // namespace refgeo
