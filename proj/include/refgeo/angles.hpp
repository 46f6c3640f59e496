#pragma once

// Refined rectilinear angles. A refined (k−1)-angle is a set of flags
// (v1, ..., vk) cut out by refinements φ̃(v1, ...) = (φ(v1), φ(v1+v2), ...) of
// linear functionals. The flag (v1, ..., vk) is identified with the refined
// point (0; v1, ..., vk): for a linear φ its refinement tuple is the angle
// tuple with a leading zero. So angles are refined polytopes on linear
// carriers with homogeneous constraints, and share all of their machinery.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refgeo/motion.hpp"
#include "refgeo/polygon.hpp"

namespace refgeo {

/// Signs of (φ(v1), φ(v1+v2), ...).
template <OrderedField F>
SignSeq eval_angle_refinement(const Vector<F>& phi, const Flag<F>& flag) {
  SignSeq out;
  Vector<F> s(phi.size());
  for (const auto& v : flag.vectors()) {
    s += v;
    out.signs.push_back(sign(dot(phi, s)));
  }
  return out;
}

/// A nonzero vector modulo positive scaling.
template <OrderedField F>
Vector<F> canonical_direction(const Vector<F>& v) {
  return canonicalize_flag(std::vector<Vector<F>>{v}).front();
}

template <OrderedField F>
class RefinedAngle {
 public:
  RefinedAngle() = default;
  explicit RefinedAngle(RefinedPolytope<F> body) : body_(std::move(body)) {
    for (const auto& c : body_.cells()) {
      if (!c.carrier().contains(Vector<F>(body_.ambient_dim())))
        throw DegenerateInput("angle cell on a carrier missing the origin");
      for (const auto& f : c.constraints())
        if (sign(f.constant) != 0) throw DegenerateInput("angle constraint is not linear");
    }
  }

  static RefinedAngle empty(std::size_t rank, std::size_t dim) { return RefinedAngle(RefinedPolytope<F>(rank, dim)); }

  /// All flags of a linear subspace (the full resolution when it is the whole space).
  static RefinedAngle full(const Carrier<F>& linear) {
    return RefinedAngle(RefinedPolytope<F>::from_cell(Cell<F>::full(linear.direction_space())));
  }
  static RefinedAngle full(std::size_t dim) { return full(Carrier<F>::whole(dim)); }

  /// {φ̃ ≻ 0 for every φ} inside the linear subspace (ambient linear forms).
  static RefinedAngle halfspaces(const Carrier<F>& linear, const std::vector<Vector<F>>& phis) {
    Carrier<F> dir = linear.direction_space();
    std::vector<AffineFunctional<F>> fs;
    for (const auto& phi : phis) fs.push_back(dir.restrict(AffineFunctional<F>{phi, F(0)}));
    return RefinedAngle(RefinedPolytope<F>(dir.dim(), dir.ambient_dim(), {Cell<F>(dir, std::move(fs))}));
  }
  static RefinedAngle halfplane(const Vector<F>& phi) {
    return halfspaces(Carrier<F>::whole(phi.size()), {phi});
  }

  /// The planar convex angle swept from ray v1 to ray v2 (v1, v2 independent).
  static RefinedAngle between(const Vector<F>& v1, const Vector<F>& v2) {
    if (v1.size() != 2 || v2.size() != 2) throw DimensionMismatch("between() is planar");
    if (sign(cross(v1, v2)) == 0) throw DegenerateInput("angle sides are parallel");
    Vector<F> phi1{-v1[1], v1[0]};  // cross(v1, ·)
    Vector<F> phi2{v2[1], -v2[0]};  // cross(·, v2)
    if (sign(dot(phi1, v2)) < 0) phi1 = -phi1;
    if (sign(dot(phi2, v1)) < 0) phi2 = -phi2;
    return halfspaces(Carrier<F>::whole(2), {phi1, phi2});
  }

  std::size_t rank() const { return body_.rank(); }
  std::size_t ambient_dim() const { return body_.ambient_dim(); }
  const RefinedPolytope<F>& body() const { return body_; }
  bool is_empty() const { return body_.is_empty(); }

  bool contains(const Flag<F>& flag) const {
    return body_.contains(RefinedPoint<F>(Vector<F>(ambient_dim()), flag));
  }

  std::optional<Flag<F>> witness() const {
    auto w = body_.witness();
    if (!w) return std::nullopt;
    // Push the position into the flag: (x; basis) with x in the open cone has
    // the same signs as (0; x, basis...) after dropping a dependent vector.
    const auto& c = body_.cells().front();
    std::vector<Vector<F>> vs;
    if (!w->position.is_zero()) vs.push_back(w->position);
    for (const auto& b : c.carrier().basis()) {
      vs.push_back(b);
      if (refgeo::rank(vs) < vs.size()) vs.pop_back();
    }
    return Flag<F>(ambient_dim(), vs);
  }

  RefinedAngle unite(const RefinedAngle& o) const { return RefinedAngle(refgeo::unite(body_, o.body_)); }
  RefinedAngle intersect(const RefinedAngle& o) const { return RefinedAngle(refgeo::intersect(body_, o.body_)); }
  RefinedAngle difference(const RefinedAngle& o) const { return RefinedAngle(refgeo::difference(body_, o.body_)); }
  bool equals(const RefinedAngle& o) const { return refgeo::equals(body_, o.body_); }

  /// Image under a linear map (apex-free translation leaves angles unchanged).
  RefinedAngle mapped(const Matrix<F>& m) const {
    return RefinedAngle(transform(AffineMap<F>(m, Vector<F>(ambient_dim())), body_));
  }
  RefinedAngle negated() const {
    Matrix<F> m = Matrix<F>::identity(ambient_dim());
    for (std::size_t i = 0; i < ambient_dim(); ++i) m(i, i) = F(-1);
    return mapped(m);
  }

 private:
  RefinedPolytope<F> body_;
};

template <OrderedField F>
bool angle_contains(const RefinedAngle<F>& a, const Flag<F>& f) {
  return a.contains(f);
}
template <OrderedField F>
bool angle_is_empty(const RefinedAngle<F>& a) {
  return a.is_empty();
}

/// Refined point of the angle separating a flag witness in the symmetric difference.
template <OrderedField F>
std::optional<RefinedPoint<F>> angle_equality_witness(const RefinedAngle<F>& a, const RefinedAngle<F>& b) {
  return equality_witness(a.body(), b.body());
}

template <OrderedField F>
bool angle_partition_check(const std::vector<RefinedAngle<F>>& parts, const RefinedAngle<F>& whole) {
  std::vector<RefinedPolytope<F>> bodies;
  for (const auto& p : parts) bodies.push_back(p.body());
  return partition_check(bodies, whole.body());
}

template <OrderedField F>
struct TangentAngle {
  RefinedAngle<F> angle;
  /// False when p lies outside closing(P); the angle is then empty.
  bool in_closure = false;
};

/// Directions entering P at p: for every cell whose closure holds p, the
/// refined half-spaces of the linear parts of the constraints tight at p.
template <OrderedField F>
TangentAngle<F> tangent_angle(const RefinedPolytope<F>& p, const Vector<F>& x) {
  TangentAngle<F> out{RefinedAngle<F>::empty(p.rank(), p.ambient_dim()), false};
  std::vector<Cell<F>> cells;
  for (const auto& c : p.cells()) {
    auto t = c.carrier().coords(x);
    if (!t) continue;
    bool inside = true;
    std::vector<AffineFunctional<F>> tight;
    for (const auto& f : c.constraints()) {
      int s = sign(f(*t));
      if (s < 0) {
        inside = false;
        break;
      }
      if (s == 0) tight.push_back({f.linear, F(0)});
    }
    if (!inside) continue;
    out.in_closure = true;
    cells.emplace_back(c.carrier().direction_space(), std::move(tight));
  }
  out.angle = RefinedAngle<F>(RefinedPolytope<F>(p.rank(), p.ambient_dim(), std::move(cells)));
  return out;
}

/// contains_point(P, (x;ρ)) ⇔ x ∈ closing(P) and ρ ∈ tangent_angle(P, x), on every sample.
template <OrderedField F>
bool pointwise_decomposition_check(const RefinedPolytope<F>& p, const std::vector<RefinedPoint<F>>& samples) {
  for (const auto& s : samples) {
    bool direct = p.contains(s);
    auto ta = tangent_angle(p, s.position);
    bool factored = ta.in_closure && ta.angle.contains(s.flag);
    if (direct != factored) return false;
  }
  return true;
}

}  // namespace refgeo
