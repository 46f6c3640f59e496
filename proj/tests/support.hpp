#pragma once

// Shared generators and independent oracles for the test suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "refgeo/refgeo.hpp"

namespace testing_support {

using Q = refgeo::Rational;
using V = refgeo::Vector<Q>;
using AF = refgeo::AffineFunctional<Q>;
using Carrier = refgeo::Carrier<Q>;
using Piece = refgeo::ConvexPiece<Q>;
using Poly = refgeo::RefinedPolytope<Q>;
using RPoint = refgeo::RefinedPoint<Q>;

inline Q rq(std::mt19937_64& rng, int lo, int hi, int maxden = 1) {
  std::uniform_int_distribution<int> n(lo * maxden, hi * maxden), d(1, maxden);
  return Q(n(rng), d(rng));
}

inline V random_vector(std::mt19937_64& rng, std::size_t d, int lo = -3, int hi = 3, int maxden = 1) {
  V v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = rq(rng, lo, hi, maxden);
  return v;
}

inline AF random_regular(std::mt19937_64& rng, std::size_t d) {
  for (;;) {
    V lin = random_vector(rng, d);
    if (!lin.is_zero()) return AF(lin, rq(rng, -3, 3, 2));
  }
}

/// Random full flag in the direction space of a carrier.
inline std::vector<V> random_flag(std::mt19937_64& rng, const Carrier& c, std::vector<V> prefix = {}) {
  std::vector<V> flag;
  for (const auto& p : prefix) {
    flag.push_back(p);
    if (refgeo::rank(flag) < flag.size()) flag.pop_back();
  }
  while (flag.size() < c.dim()) {
    V w = random_vector(rng, c.dim(), -2, 2);
    flag.push_back(c.embed_direction(w));
    if (refgeo::rank(flag) < flag.size() || flag.back().is_zero()) flag.pop_back();
  }
  return flag;
}

/// Convex piece spanned by affinely independent points, on their affine hull.
inline Piece simplex_piece(const std::vector<V>& pts) {
  Carrier hull = refgeo::affine_hull(pts);
  const std::size_t k = hull.dim();
  std::vector<V> t;
  for (const auto& p : pts) t.push_back(*hull.coords(p));
  Piece piece{hull, {}};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    // a·t_j + c = 0 for j != i: unknowns (a, c).
    std::vector<V> rows;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      V r(k + 1);
      for (std::size_t q = 0; q < k; ++q) r[q] = t[j][q];
      r[k] = Q(1);
      rows.push_back(r);
    }
    auto sol = refgeo::solve_affine(rows, std::vector<Q>(rows.size(), Q(0)), k + 1);
    V n = sol->second.front();
    V a(k);
    for (std::size_t q = 0; q < k; ++q) a[q] = n[q];
    AF f(a, n[k]);
    if (f(t[i]).sign() < 0) f = -f;
    piece.constraints.push_back(f);
  }
  return piece;
}

inline std::vector<V> random_simplex_points(std::mt19937_64& rng, std::size_t d, std::size_t k,
                                            const V& offset, int spread = 4) {
  for (;;) {
    std::vector<V> pts{offset + random_vector(rng, d, -1, 1)};
    for (std::size_t i = 0; i < k; ++i) pts.push_back(pts.front() + random_vector(rng, d, -spread, spread));
    std::vector<V> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    if (refgeo::rank(diffs) == k) return pts;
  }
}

/// A bounded rank-k piece with at most `max_constraints` constraints: a
/// simplex, sometimes trimmed by an extra half-space through its interior.
inline Piece random_piece(std::mt19937_64& rng, std::size_t d, std::size_t k, const V& offset,
                          std::size_t max_constraints = 6) {
  auto pts = random_simplex_points(rng, d, k, offset);
  Piece p = simplex_piece(pts);
  std::uniform_int_distribution<int> coin(0, 1);
  if (k >= 1 && p.constraints.size() < max_constraints && coin(rng)) {
    V centroid(d);
    for (const auto& q : pts) centroid += q;
    centroid = centroid / Q(static_cast<long>(pts.size()));
    V w = random_vector(rng, k, -2, 2);
    if (!w.is_zero()) {
      V tc = *p.carrier.coords(centroid);
      AF cut(w, -refgeo::dot(w, tc) + Q(1, 3));
      p.constraints.push_back(cut);
    }
  }
  return p;
}

/// Points on the faces of a simplex piece: random positive combinations of a
/// random vertex subset (vertices, edges, facets and interior).
inline V random_face_point(std::mt19937_64& rng, const std::vector<V>& verts) {
  std::uniform_int_distribution<std::size_t> count(1, verts.size());
  std::vector<std::size_t> idx(verts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  std::size_t m = count(rng);
  V p(verts.front().size());
  Q total(0);
  std::vector<Q> w;
  for (std::size_t i = 0; i < m; ++i) {
    w.push_back(rq(rng, 1, 3));
    total = total + w.back();
  }
  for (std::size_t i = 0; i < m; ++i) p += verts[idx[i]] * (w[i] / total);
  return p;
}

/// Definitional refined membership, independent of the cell code path: the
/// point must lie on the carrier (rank tests in ambient coordinates), the
/// flag must span the direction space, and every ambient-extended constraint
/// must have a lexicographically positive definitional tuple.
inline bool oracle_contains(const Piece& piece, const RPoint& p) {
  const Carrier& c = piece.carrier;
  std::vector<V> span = c.basis();
  std::vector<V> with_pos = span;
  with_pos.push_back(p.position - c.base());
  if (refgeo::rank(with_pos) != span.size()) return false;
  if (p.level() != span.size()) return false;
  for (const auto& v : p.flag.vectors()) {
    auto s = span;
    s.push_back(v);
    if (refgeo::rank(s) != span.size()) return false;
  }
  for (const auto& f : piece.constraints) {
    AF amb = c.extend(f);
    if (!refgeo::lex_positive(refgeo::eval_refinement(amb, p.position, p.flag.vectors()))) return false;
  }
  return true;
}

inline bool oracle_contains(const std::vector<Piece>& pieces, const RPoint& p) {
  return std::any_of(pieces.begin(), pieces.end(), [&](const Piece& q) { return oracle_contains(q, p); });
}

/// Refined sample points on a piece's carrier: positions from the piece's
/// vertices, faces and surroundings, flags often led by an edge direction.
inline std::vector<RPoint> biased_samples(std::mt19937_64& rng, const Piece& piece, const std::vector<V>& verts,
                                          std::size_t n) {
  std::vector<RPoint> out;
  std::uniform_int_distribution<int> mode(0, 5);
  std::uniform_int_distribution<std::size_t> vi(0, verts.size() - 1);
  for (std::size_t s = 0; s < n; ++s) {
    V x;
    switch (mode(rng)) {
      case 0:
        x = verts[vi(rng)];
        break;
      case 1:
      case 2:
        x = random_face_point(rng, verts);
        break;
      case 3: {
        // Outside-ish: reflect a face point through a vertex.
        V v = verts[vi(rng)];
        x = v * Q(2) - random_face_point(rng, verts);
        break;
      }
      default:
        x = piece.carrier.embed(random_vector(rng, piece.carrier.dim(), -4, 4, 2));
    }
    std::vector<V> prefix;
    if (mode(rng) < 3 && verts.size() >= 2) {
      std::size_t a = vi(rng), b = vi(rng);
      if (a != b) prefix.push_back((verts[b] - verts[a]) * (mode(rng) % 2 ? Q(1) : Q(-1)));
    }
    out.emplace_back(x, refgeo::Flag<Q>(x.size(), random_flag(rng, piece.carrier, prefix)));
  }
  return out;
}

/// A random bounded pure rank-k conventional polytope in d dimensions with its
/// pieces' vertex sets (for biased sampling). Pieces sometimes share a carrier.
struct Instance {
  refgeo::ConventionalPolytope<Q> poly;
  std::vector<std::vector<V>> verts;
};

inline Instance random_instance(std::mt19937_64& rng, std::size_t d, std::size_t k, std::size_t max_pieces = 3) {
  std::uniform_int_distribution<std::size_t> count(1, max_pieces);
  std::uniform_int_distribution<int> coin(0, 2);
  Instance inst{{k, d, {}}, {}};
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<V> pts;
    if (i > 0 && k < d && coin(rng) == 0) {
      const Carrier& c = inst.poly.pieces.front().carrier;
      for (;;) {
        pts.clear();
        for (std::size_t j = 0; j <= k; ++j) pts.push_back(c.embed(random_vector(rng, k, -3, 3)));
        std::vector<V> diffs;
        for (std::size_t j = 1; j < pts.size(); ++j) diffs.push_back(pts[j] - pts[0]);
        if (refgeo::rank(diffs) == k) break;
      }
    } else {
      pts = random_simplex_points(rng, d, k, random_vector(rng, d, -1, 1));
    }
    Piece p = simplex_piece(pts);
    if (coin(rng) == 0 && k >= 1) {
      // Trim with a half-space through the centroid's neighbourhood.
      V centroid(d);
      for (const auto& q : pts) centroid += q;
      centroid = centroid / Q(static_cast<long>(pts.size()));
      V w = random_vector(rng, k, -2, 2);
      if (!w.is_zero()) {
        V tc = *p.carrier.coords(centroid);
        p.constraints.push_back(AF(w, -refgeo::dot(w, tc) + Q(1, 4)));
      }
    }
    inst.poly.pieces.push_back(p);
    inst.verts.push_back(pts);
  }
  return inst;
}

/// Pieces of rank k on the carriers of `base` (so that the two instances can
/// overlap in rank k even when k < d), sometimes trimmed.
inline Instance random_instance_on(std::mt19937_64& rng, const Instance& base, std::size_t max_pieces = 3) {
  const std::size_t k = base.poly.rank, d = base.poly.ambient_dim;
  std::uniform_int_distribution<std::size_t> count(1, max_pieces), which(0, base.poly.pieces.size() - 1);
  std::uniform_int_distribution<int> coin(0, 2);
  Instance inst{{k, d, {}}, {}};
  for (std::size_t i = count(rng); i > 0; --i) {
    const Carrier& c = base.poly.pieces[which(rng)].carrier;
    std::vector<V> pts;
    for (;;) {
      pts.clear();
      for (std::size_t j = 0; j <= k; ++j) pts.push_back(c.embed(random_vector(rng, k, -3, 3)));
      std::vector<V> diffs;
      for (std::size_t j = 1; j < pts.size(); ++j) diffs.push_back(pts[j] - pts[0]);
      if (refgeo::rank(diffs) == k) break;
    }
    Piece p = simplex_piece(pts);
    if (coin(rng) == 0) {
      V centroid(d);
      for (const auto& q : pts) centroid += q;
      centroid = centroid / Q(static_cast<long>(pts.size()));
      V w = random_vector(rng, k, -2, 2);
      if (!w.is_zero()) p.constraints.push_back(AF(w, -refgeo::dot(w, *p.carrier.coords(centroid)) + Q(1, 4)));
    }
    inst.poly.pieces.push_back(p);
    inst.verts.push_back(pts);
  }
  return inst;
}

/// Biased samples over all pieces of several instances, at refinement level k.
inline std::vector<RPoint> instance_samples(std::mt19937_64& rng, const std::vector<const Instance*>& insts,
                                            std::size_t n) {
  std::vector<RPoint> out;
  std::vector<std::pair<const Piece*, const std::vector<V>*>> all;
  for (const auto* inst : insts)
    for (std::size_t i = 0; i < inst->poly.pieces.size(); ++i) all.emplace_back(&inst->poly.pieces[i], &inst->verts[i]);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  while (out.size() < n) {
    auto [piece, verts] = all[pick(rng)];
    auto more = biased_samples(rng, *piece, *verts, 1);
    out.push_back(more.front());
  }
  return out;
}

/// Random simple polygon with 3..max_vertices integer vertices: points
/// sorted by angle around their centroid, retried until simple.
inline refgeo::Polygon<Q> random_simple_polygon(std::mt19937_64& rng, std::size_t max_vertices = 6, int spread = 4) {
  std::uniform_int_distribution<std::size_t> count(3, max_vertices);
  for (;;) {
    std::size_t n = count(rng);
    refgeo::Polygon<Q> pts;
    for (std::size_t i = 0; i < n; ++i) {
      V p = random_vector(rng, 2, 0, spread);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    if (pts.size() < 3) continue;
    refgeo::sort_ccw(pts);
    pts = refgeo::remove_collinear(pts);
    if (pts.size() < 3 || !refgeo::is_simple(pts) || refgeo::signed_area(pts).sign() == 0) continue;
    return pts;
  }
}

/// Scales x-coordinates so the area of q becomes `target`.
inline refgeo::Polygon<Q> with_area(refgeo::Polygon<Q> q, const Q& target) {
  Q factor = target / refgeo::abs_value(refgeo::signed_area(q));
  for (auto& v : q) v[0] = v[0] * factor;
  return q;
}

}  // namespace testing_support
