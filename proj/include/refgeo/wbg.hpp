#pragma once

// Wallace–Bolyai–Gerwien equidecomposition with exact, genuinely disjoint
// refined pieces.
//
// Pipeline: triangulate both polygons, cut triangles along cevians until the
// two area sequences agree, turn each triangle into a parallelogram (midline
// cut plus a half-turn), shear that parallelogram into the width-1 rectangle
// of the same area, and meet the two chains on a common stack of rectangles.
// Every shear is an I.35 cut-and-paste along a side, so all motions are
// translations or half-turns and everything stays in the base field.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refgeo/motion.hpp"
#include "refgeo/polygon.hpp"

namespace refgeo {

template <OrderedField F>
using Motion = AffineMap<F>;

namespace detail {

/// Exact ⌈x⌉ via a floating estimate corrected in the field.
template <OrderedField F>
long ceil_int(const F& x) {
  long n = static_cast<long>(std::ceil(to_double(x)));
  while (F(n) < x) ++n;
  while (!(F(n - 1) < x)) --n;
  return n;
}

template <OrderedField F>
long floor_int(const F& x) {
  return -ceil_int(-x);
}

template <OrderedField F>
struct Box {
  Vector<F> lo, hi;
};

template <OrderedField F>
Box<F> box_of(const Polygon<F>& pts) {
  Box<F> b{pts.front(), pts.front()};
  for (const auto& p : pts)
    for (std::size_t i = 0; i < 2; ++i) {
      if (p[i] < b.lo[i]) b.lo[i] = p[i];
      if (b.hi[i] < p[i]) b.hi[i] = p[i];
    }
  return b;
}

/// Boxes whose interiors meet. Closures with disjoint box interiors meet in
/// a set of rank < 2, so the refined cells are disjoint.
template <OrderedField F>
bool boxes_overlap(const Box<F>& a, const Box<F>& b) {
  for (std::size_t i = 0; i < 2; ++i)
    if (!(a.lo[i] < b.hi[i] && b.lo[i] < a.hi[i])) return false;
  return true;
}

/// A nonempty bounded planar cell rebuilt from its closure's vertices, which
/// drops redundant constraints (a refined 2-cell is determined by its closure).
template <OrderedField F>
Cell<F> tidy(const Cell<F>& c) {
  auto piece = convex_piece(piece_vertices(c.closure()));
  return Cell<F>(piece.carrier, piece.constraints);
}

template <OrderedField F>
Polygon<F> cell_vertices(const Cell<F>& c) {
  return piece_vertices(c.closure());
}

}  // namespace detail

/// O + αu + βv with α, β ∈ [0, 1].
template <OrderedField F>
struct Parallelogram {
  Vector<F> origin, u, v;

  std::array<Vector<F>, 4> corners() const { return {origin, origin + u, origin + u + v, origin + v}; }
  F area() const { return abs_value(cross(u, v)); }

  /// The two coordinate functionals α, β.
  std::pair<AffineFunctional<F>, AffineFunctional<F>> coordinates() const {
    F det = cross(u, v);
    if (sign(det) == 0) throw DegenerateInput("flat parallelogram");
    Vector<F> ra{v[1] / det, -v[0] / det}, rb{-u[1] / det, u[0] / det};
    return {AffineFunctional<F>(ra, -dot(ra, origin)), AffineFunctional<F>(rb, -dot(rb, origin))};
  }

  Cell<F> cell() const {
    auto [a, b] = coordinates();
    return Cell<F>(Carrier<F>::whole(2), {a, AffineFunctional<F>(-a.linear, F(1) - a.constant), b,
                                          AffineFunctional<F>(-b.linear, F(1) - b.constant)});
  }

  Polygon<F> polygon() const {
    auto c = corners();
    return make_ccw(Polygon<F>(c.begin(), c.end()));
  }

  bool same_set(const Parallelogram& o) const {
    auto a = corners(), b = o.corners();
    std::vector<Vector<F>> x(a.begin(), a.end()), y(b.begin(), b.end());
    return std::all_of(x.begin(), x.end(), [&](const Vector<F>& p) { return std::find(y.begin(), y.end(), p) != y.end(); });
  }
};

/// Pieces of a source figure, each with the motion that places it.
template <OrderedField F>
struct CutAndPaste {
  std::vector<Cell<F>> pieces;
  std::vector<Motion<F>> motions;

  static CutAndPaste single(const Cell<F>& c, Motion<F> m) { return {{c}, {std::move(m)}}; }
  std::size_t size() const { return pieces.size(); }
  Cell<F> image(std::size_t i) const { return transform(motions[i], pieces[i]); }
};

/// Applies `second` (a cut-and-paste of the figure produced by `first`)
/// after `first`: pieces are A_i ∩ g_i⁻¹(B_j) with motion h_j ∘ g_i.
template <OrderedField F>
CutAndPaste<F> then(const CutAndPaste<F>& first, const CutAndPaste<F>& second) {
  std::vector<detail::Box<F>> boxes;
  for (const auto& b : second.pieces) boxes.push_back(detail::box_of(detail::cell_vertices(b)));
  CutAndPaste<F> out;
  for (std::size_t i = 0; i < first.size(); ++i) {
    Cell<F> img = first.image(i);
    auto box = detail::box_of(detail::cell_vertices(img));
    Motion<F> back = first.motions[i].inverse();
    for (std::size_t j = 0; j < second.size(); ++j) {
      if (!detail::boxes_overlap(box, boxes[j])) continue;
      auto c = img.intersect(second.pieces[j]);
      if (!c || c->is_empty()) continue;
      out.pieces.push_back(detail::tidy(transform(back, *c)));
      out.motions.push_back(second.motions[j].compose(first.motions[i]));
    }
  }
  return out;
}

template <OrderedField F>
struct ShapeStep {
  CutAndPaste<F> moves;
  Parallelogram<F> result;
};

/// Midline cut parallel to AB; the top triangle turns 180° about the midpoint
/// of BC and lands beside the trapezoid. Result: O = A, u = B − A, v = (C − A)/2.
template <OrderedField F>
ShapeStep<F> triangle_to_parallelogram(const Triangle<F>& t) {
  const auto& [a, b, c] = t;
  if (orient(a, b, c) == 0) throw DegenerateInput("degenerate triangle");
  Vector<F> m1 = (a + c) / F(2), m2 = (b + c) / F(2);
  auto cut = left_of(m2, m1);
  if (sign(cut(a)) < 0) cut = -cut;
  auto tri = convex_piece(Polygon<F>{a, b, c});
  Cell<F> base(tri.carrier, tri.constraints), bottom = base.with(cut), top = base.with(-cut);
  ShapeStep<F> s;
  s.moves.pieces = {bottom, top};
  s.moves.motions = {Motion<F>::identity(2), Motion<F>::half_turn(m2)};
  s.result = {a, b - a, (c - a) / F(2)};
  return s;
}

/// I.35 shear by cut-and-paste: slides the side opposite `along` by t times
/// that side. along = 0 maps (u, v) to (u, v + t·u); along = 1 maps (u, v)
/// to (u + t·v, v). Strips between the lines α − tβ ∈ ℤ are translated by
/// integer multiples of the sliding side; at most ⌈|t|⌉ + 1 pieces.
template <OrderedField F>
ShapeStep<F> equiareal_shear(const Parallelogram<F>& pg, int along, const F& t) {
  ShapeStep<F> s;
  Cell<F> whole = pg.cell();
  if (is_zero(t)) {
    s.moves = CutAndPaste<F>::single(whole, Motion<F>::identity(2));
    s.result = pg;
    return s;
  }
  auto [ca, cb] = pg.coordinates();
  const auto& alpha = along == 0 ? ca : cb;
  const auto& beta = along == 0 ? cb : ca;
  const Vector<F>& p = along == 0 ? pg.u : pg.v;
  AffineFunctional<F> psi(alpha.linear - beta.linear * t, alpha.constant - beta.constant * t);
  // α − tβ ranges over [min(0, −t), 1 + max(0, −t)] on the parallelogram.
  F lo = sign(t) > 0 ? -t : F(0), hi = sign(t) > 0 ? F(1) : F(1) - t;
  for (long n = detail::floor_int(-hi); n <= detail::ceil_int(F(1) - lo); ++n) {
    // Strip n: −n ≤ α − tβ ≤ 1 − n, translated by n·p.
    AffineFunctional<F> low(psi.linear, psi.constant + F(n));
    AffineFunctional<F> high(-psi.linear, F(1 - n) - psi.constant);
    Cell<F> strip = whole.with(low).with(high);
    if (strip.is_empty()) continue;
    s.moves.pieces.push_back(strip);
    s.moves.motions.push_back(Motion<F>::translate(p * F(n)));
  }
  s.result = along == 0 ? Parallelogram<F>{pg.origin, pg.u, pg.v + pg.u * t}
                        : Parallelogram<F>{pg.origin, pg.u + pg.v * t, pg.v};
  return s;
}

/// A rotation taking direction u to direction w about `center`, with cosine
/// and sine (u·w, u×w)/(‖u‖‖w‖). Needs square roots unless the norms are
/// rational, so it is meant for the quadratic tower.
template <OrderedField F>
Motion<F> aligning_rotation(const Vector<F>& u, const Vector<F>& w, const Vector<F>& center) {
  F norms = F::sqrt(dot(u, u) * dot(w, w));
  if (is_zero(norms)) throw DegenerateInput("zero direction");
  auto r = Motion<F>::rotation(dot(u, w) / norms, cross(u, w) / norms);
  return Motion<F>::translate(center).compose(r).compose(Motion<F>::translate(-center));
}

/// One shear of a plan: along side 0 or 1 by the given parameter.
template <OrderedField F>
struct Shear {
  int along;
  F t;
};

/// Ordered sequence of shears taking (u, v) to a prescribed side pair.
template <OrderedField F>
struct ShearPlan {
  Parallelogram<F> start;
  std::vector<Shear<F>> shears;
  long cost = 0;
};

namespace detail {

template <OrderedField F>
long plan_cost(const std::vector<Shear<F>>& shears) {
  long c = 1;
  for (const auto& s : shears)
    if (!is_zero(s.t)) c *= ceil_int(abs_value(s.t)) + 1;
  return c;
}

/// Factorizations of X ∈ SL₂ into unipotent factors. Right-multiplying the
/// side matrix [u v] by U(t) = [[1,t],[0,1]] is a shear along u, by
/// L(s) = [[1,0],[s,1]] a shear along v.
template <OrderedField F>
std::vector<std::vector<Shear<F>>> sl2_factorizations(const F& a, const F& b, const F& c, const F& d) {
  std::vector<std::vector<Shear<F>>> out;
  if (!is_zero(c)) out.push_back({{0, (a - F(1)) / c}, {1, c}, {0, (d - F(1)) / c}});
  if (!is_zero(b)) out.push_back({{1, (d - F(1)) / b}, {0, b}, {1, (a - F(1)) / b}});
  if (is_zero(b) && is_zero(c)) {
    if (a == F(1)) {
      out.push_back({});
    } else {
      // X = L(1)·X' with X' = L(−1)·X, whose lower-left entry −a is nonzero.
      F a2 = a, b2 = b, c2 = c - a, d2 = d - b;
      out.push_back({{1, F(1)}, {0, (a2 - F(1)) / c2}, {1, c2}, {0, (d2 - F(1)) / c2}});
    }
  }
  for (auto& f : out)
    f.erase(std::remove_if(f.begin(), f.end(), [](const Shear<F>& s) { return is_zero(s.t); }), f.end());
  return out;
}

}  // namespace detail

/// Cheapest shear plan taking the parallelogram to the axis-parallel
/// rectangle of width 1 (and height = its area), over the four corner
/// choices of the source and the four side orders of the target.
template <OrderedField F>
ShearPlan<F> plan_unit_width(const Parallelogram<F>& pg) {
  F h = pg.area();
  if (sign(cross(pg.u, pg.v)) < 0) return plan_unit_width(Parallelogram<F>{pg.origin + pg.v, pg.u, -pg.v});
  const Vector<F>& u = pg.u;
  const Vector<F>& v = pg.v;
  std::vector<Parallelogram<F>> starts{{pg.origin, u, v},
                                       {pg.origin + u, v, -u},
                                       {pg.origin + u + v, -u, -v},
                                       {pg.origin + v, -v, u}};
  std::vector<std::pair<Vector<F>, Vector<F>>> targets{{Vector<F>{F(1), F(0)}, Vector<F>{F(0), h}},
                                                       {Vector<F>{F(0), h}, Vector<F>{F(-1), F(0)}},
                                                       {Vector<F>{F(-1), F(0)}, Vector<F>{F(0), -h}},
                                                       {Vector<F>{F(0), -h}, Vector<F>{F(1), F(0)}}};
  std::optional<ShearPlan<F>> best;
  for (const auto& s : starts)
    for (const auto& [p, q] : targets) {
      // X = [u v]⁻¹ [p q].
      F det = cross(s.u, s.v);
      F a = (s.v[1] * p[0] - s.v[0] * p[1]) / det, b = (s.v[1] * q[0] - s.v[0] * q[1]) / det;
      F c = (s.u[0] * p[1] - s.u[1] * p[0]) / det, d = (s.u[0] * q[1] - s.u[1] * q[0]) / det;
      for (auto& f : detail::sl2_factorizations(a, b, c, d)) {
        long cost = detail::plan_cost(f);
        if (!best || cost < best->cost) best = ShearPlan<F>{s, f, cost};
      }
    }
  return *best;
}

/// Cut-and-paste taking a triangle onto the width-1 rectangle
/// [0, 1] × [y, y + area]; `notes` receives a line per stage.
template <OrderedField F>
CutAndPaste<F> triangle_to_strip(const Triangle<F>& t, const F& y, std::vector<std::string>* notes = nullptr) {
  std::optional<std::pair<ShapeStep<F>, ShearPlan<F>>> best;
  for (int k = 0; k < 3; ++k) {
    Triangle<F> r{t[k], t[(k + 1) % 3], t[(k + 2) % 3]};
    auto step = triangle_to_parallelogram(r);
    auto plan = plan_unit_width(step.result);
    if (!best || plan.cost < best->second.cost) best = {step, plan};
  }
  auto& [first, plan] = *best;
  CutAndPaste<F> chain = first.moves;
  Parallelogram<F> pg = plan.start;
  if (notes)
    notes->push_back("  triangle -> parallelogram " + pg.origin.str() + " + " + pg.u.str() + ", " + pg.v.str());
  for (const auto& s : plan.shears) {
    auto step = equiareal_shear(pg, s.along, s.t);
    chain = then(chain, step.moves);
    pg = step.result;
    if (notes)
      notes->push_back("  shear along side " + std::to_string(s.along) + " by " + to_string(s.t) + ": " +
                       std::to_string(step.moves.size()) + " strips, chain has " + std::to_string(chain.size()) +
                       " pieces");
  }
  auto box = detail::box_of(pg.polygon());
  Vector<F> shift = Vector<F>{F(0), y} - box.lo;
  if (!shift.is_zero()) chain = then(chain, CutAndPaste<F>::single(pg.cell(), Motion<F>::translate(shift)));
  if (notes) notes->push_back("  placed on [0, 1] x [" + to_string(y) + ", " + to_string(y + pg.area()) + "]");
  return chain;
}

template <OrderedField F>
struct Decomposition {
  std::vector<RefinedPolytope<F>> pieces_p, pieces_q;
  std::vector<Motion<F>> motions;
  std::vector<std::string> log;

  std::size_t size() const { return motions.size(); }
};

/// Ear-clipped triangles of a simple polygon (any orientation).
template <OrderedField F>
std::vector<Triangle<F>> triangulate(const Polygon<F>& poly) {
  if (poly.size() < 3 || !is_simple(poly)) throw NonSimplePolygon("polygon is not simple");
  return ear_clip(make_ccw(remove_collinear(poly)));
}

template <OrderedField F>
F triangle_area(const Triangle<F>& t) {
  return abs_value(cross(t[1] - t[0], t[2] - t[0])) / F(2);
}

/// Cuts triangles along cevians until both lists have the same area
/// sequence: a two-pointer walk over the prefix sums. At most m + n − 1 pairs.
template <OrderedField F>
std::pair<std::vector<Triangle<F>>, std::vector<Triangle<F>>> match_triangle_areas(std::vector<Triangle<F>> a,
                                                                                 std::vector<Triangle<F>> b) {
  F sa(0), sb(0);
  for (const auto& t : a) sa = sa + triangle_area(t);
  for (const auto& t : b) sb = sb + triangle_area(t);
  if (sa != sb) throw AreaMismatch(to_string(sa), to_string(sb), to_string(sa - sb));
  std::vector<Triangle<F>> oa, ob;
  // Splits t = (A, B, C) into (A, B, D) of area s and the rest (A, D, C).
  auto split = [](const Triangle<F>& t, const F& s) {
    F whole = triangle_area(t);
    Vector<F> d = t[1] + (t[2] - t[1]) * (s / whole);
    return std::pair<Triangle<F>, Triangle<F>>{Triangle<F>{t[0], t[1], d}, Triangle<F>{t[0], d, t[2]}};
  };
  std::size_t i = 0, j = 0;
  std::optional<Triangle<F>> ca, cb;
  while (true) {
    if (!ca && i < a.size()) ca = a[i++];
    if (!cb && j < b.size()) cb = b[j++];
    if (!ca || !cb) break;
    F x = triangle_area(*ca), y = triangle_area(*cb);
    if (x == y) {
      oa.push_back(*ca);
      ob.push_back(*cb);
      ca.reset();
      cb.reset();
    } else if (y < x) {
      auto [head, rest] = split(*ca, y);
      oa.push_back(head);
      ob.push_back(*cb);
      ca = rest;
      cb.reset();
    } else {
      auto [head, rest] = split(*cb, x);
      oa.push_back(*ca);
      ob.push_back(head);
      cb = rest;
      ca.reset();
    }
  }
  return {oa, ob};
}

template <OrderedField F>
RefinedPolytope<F> triangle_polytope(const Triangle<F>& t) {
  return triangle_polytope(t[0], t[1], t[2]);
}

template <OrderedField F>
Decomposition<F> equidecompose(const Polygon<F>& p_in, const Polygon<F>& q_in) {
  if (p_in.size() < 3 || !is_simple(p_in)) throw NonSimplePolygon("first polygon is not simple");
  if (q_in.size() < 3 || !is_simple(q_in)) throw NonSimplePolygon("second polygon is not simple");
  F ap = abs_value(signed_area(p_in)), aq = abs_value(signed_area(q_in));
  if (ap != aq) throw AreaMismatch(to_string(ap), to_string(aq), to_string(ap - aq));
  Decomposition<F> d;
  auto pp = polygon_polytope(make_ccw(p_in)), qp = polygon_polytope(make_ccw(q_in));
  if (equals(pp, qp)) {
    d.pieces_p = {pp};
    d.pieces_q = {qp};
    d.motions = {Motion<F>::identity(2)};
    d.log.push_back("polygons coincide: one piece, identity motion");
    return d;
  }
  auto tp = triangulate(p_in), tq = triangulate(q_in);
  d.log.push_back("triangulated: " + std::to_string(tp.size()) + " and " + std::to_string(tq.size()) + " triangles");
  auto [mp, mq] = match_triangle_areas(tp, tq);
  d.log.push_back("matched areas: " + std::to_string(mp.size()) + " triangle pairs");
  F y(0);
  for (std::size_t i = 0; i < mp.size(); ++i) {
    d.log.push_back("pair " + std::to_string(i) + ", area " + to_string(triangle_area(mp[i])));
    auto cp = triangle_to_strip(mp[i], y, &d.log);
    auto cq = triangle_to_strip(mq[i], y, &d.log);
    y = y + triangle_area(mp[i]);
    // Common refinement on the shared rectangle.
    std::vector<detail::Box<F>> qboxes;
    std::vector<Cell<F>> qimages;
    for (std::size_t k = 0; k < cq.size(); ++k) {
      qimages.push_back(cq.image(k));
      qboxes.push_back(detail::box_of(detail::cell_vertices(qimages.back())));
    }
    std::size_t before = d.size();
    for (std::size_t k = 0; k < cp.size(); ++k) {
      Cell<F> img = cp.image(k);
      auto box = detail::box_of(detail::cell_vertices(img));
      Motion<F> back_p = cp.motions[k].inverse();
      for (std::size_t l = 0; l < cq.size(); ++l) {
        if (!detail::boxes_overlap(box, qboxes[l])) continue;
        auto c = img.intersect(qimages[l]);
        if (!c || c->is_empty()) continue;
        Cell<F> mid = detail::tidy(*c);
        Motion<F> back_q = cq.motions[l].inverse();
        d.pieces_p.push_back(RefinedPolytope<F>::from_cell(detail::tidy(transform(back_p, mid))));
        d.pieces_q.push_back(RefinedPolytope<F>::from_cell(detail::tidy(transform(back_q, mid))));
        d.motions.push_back(back_q.compose(cp.motions[k]));
      }
    }
    d.log.push_back("  common refinement: " + std::to_string(d.size() - before) + " pieces");
  }
  d.log.push_back("total: " + std::to_string(d.size()) + " pieces");
  return d;
}

/// Partition check for bounded planar refined 2-polytopes. Each part must
/// lie in the whole, parts must be pairwise disjoint (pairs whose closures'
/// bounding boxes have disjoint interiors are disjoint without a test), and
/// the areas must add up: for disjoint parts inside the whole, a missing
/// region would be a nonempty refined 2-polytope of positive area.
template <OrderedField F>
PartitionReport<F> planar_partition_report(const std::vector<RefinedPolytope<F>>& parts,
                                           const RefinedPolytope<F>& whole) {
  auto planar = [](const RefinedPolytope<F>& p) { return p.rank() == 2 && p.ambient_dim() == 2 && is_bounded(p); };
  if (!planar(whole) || !std::all_of(parts.begin(), parts.end(), planar)) return partition_report(parts, whole);
  PartitionReport<F> r;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (auto w = subset_witness(parts[i], whole)) {
      r.ok = false;
      r.witness = w;
      r.message = "part " + std::to_string(i) + " is not inside the whole";
      return r;
    }
  struct Entry {
    std::size_t part;
    const Cell<F>* cell;
    detail::Box<F> box;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& c : parts[i].cells()) entries.push_back({i, &c, detail::box_of(detail::cell_vertices(c))});
  // Sweep along x: only entries whose x-ranges overlap are compared.
  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return entries[a].box.lo[0] < entries[b].box.lo[0]; });
  for (std::size_t x = 0; x < order.size(); ++x) {
    const Entry& e = entries[order[x]];
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      const Entry& f = entries[order[y]];
      if (!(f.box.lo[0] < e.box.hi[0])) break;
      if (e.part == f.part || !detail::boxes_overlap(e.box, f.box)) continue;
      auto c = e.cell->intersect(*f.cell);
      if (!c) continue;
      if (auto w = c->witness()) {
        r.ok = false;
        r.overlap = std::pair{std::min(e.part, f.part), std::max(e.part, f.part)};
        r.witness = w;
        r.message = "parts " + std::to_string(r.overlap->first) + " and " + std::to_string(r.overlap->second) +
                    " overlap";
        return r;
      }
    }
  }
  F total(0);
  for (const auto& p : parts) total = total + area(p);
  F target = area(whole);
  if (total != target) {
    auto rest = difference(whole, unite_all(2, 2, parts));
    r.ok = false;
    r.witness = rest.witness();
    r.message = "parts miss area " + to_string(target - total);
  }
  return r;
}

template <OrderedField F>
struct VerificationCheck {
  std::string name;
  bool ok = true;
  std::string detail;
  std::optional<RefinedPoint<F>> witness;
};

template <OrderedField F>
struct VerificationReport {
  std::vector<VerificationCheck<F>> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
  }

  std::string str() const {
    std::string s;
    for (const auto& c : checks) {
      s += (c.ok ? "ok   " : "FAIL ") + c.name;
      if (!c.detail.empty()) s += ": " + c.detail;
      if (c.witness) s += " [witness " + c.witness->str() + "]";
      s += "\n";
    }
    return s;
  }
};

namespace detail {

/// Sorted squared pairwise distances between the distinct closure vertices.
template <OrderedField F>
std::vector<F> distance_signature(const RefinedPolytope<F>& p) {
  std::vector<Vector<F>> pts;
  for (const auto& c : p.cells())
    for (auto& v : cell_vertices(c))
      if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
  std::vector<F> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back(dot(pts[i] - pts[j], pts[i] - pts[j]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

template <OrderedField F>
VerificationReport<F> verify_decomposition(const Decomposition<F>& d, const RefinedPolytope<F>& p,
                                           const RefinedPolytope<F>& q) {
  VerificationReport<F> rep;
  if (d.pieces_p.size() != d.motions.size() || d.pieces_q.size() != d.motions.size()) {
    rep.checks.push_back({"piece lists", false, "lengths differ", std::nullopt});
    return rep;
  }
  auto partition = [&](const std::string& name, const std::vector<RefinedPolytope<F>>& parts,
                       const RefinedPolytope<F>& whole) {
    auto r = planar_partition_report(parts, whole);
    rep.checks.push_back({name, r.ok, r.message, r.witness});
  };
  partition("partition of P", d.pieces_p, p);
  partition("partition of Q", d.pieces_q, q);

  VerificationCheck<F> rigid{"motions are rigid", true, "", std::nullopt};
  VerificationCheck<F> maps{"motions carry P-pieces onto Q-pieces", true, "", std::nullopt};
  VerificationCheck<F> sig{"squared-distance signatures agree", true, "", std::nullopt};
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (rigid.ok && !d.motions[i].is_rigid()) {
      rigid.ok = false;
      rigid.detail = "motion " + std::to_string(i) + " is not a rotation plus translation";
    }
    if (maps.ok) {
      auto w = equality_witness(transform(d.motions[i], d.pieces_p[i]), d.pieces_q[i]);
      if (w) {
        maps.ok = false;
        maps.detail = "piece " + std::to_string(i);
        maps.witness = w;
      }
    }
    if (sig.ok && detail::distance_signature(d.pieces_p[i]) != detail::distance_signature(d.pieces_q[i])) {
      sig.ok = false;
      sig.detail = "piece " + std::to_string(i);
    }
  }
  rep.checks.push_back(rigid);
  rep.checks.push_back(maps);
  rep.checks.push_back(sig);
  return rep;
}

template <OrderedField F>
VerificationReport<F> verify_decomposition(const Decomposition<F>& d, const Polygon<F>& p, const Polygon<F>& q) {
  return verify_decomposition(d, polygon_polytope(make_ccw(p)), polygon_polytope(make_ccw(q)));
}

}  // namespace refgeo
