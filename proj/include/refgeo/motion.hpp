#pragma once

// Invertible affine maps x ↦ Mx + t and their action on refined objects.
// A refined point (x; ρ) maps to (Mx + t; Mρ), which preserves every
// refinement sign, so images of cells are again cells.

#include <string>
#include <utility>
#include <vector>

#include "refgeo/algebra.hpp"

namespace refgeo {

template <OrderedField F>
struct AffineMap {
  Matrix<F> linear;
  Vector<F> translation;

  AffineMap() = default;
  AffineMap(Matrix<F> m, Vector<F> t) : linear(std::move(m)), translation(std::move(t)) {
    if (linear.n != translation.size()) throw DimensionMismatch("affine map parts of different sizes");
  }

  static AffineMap identity(std::size_t d) { return {Matrix<F>::identity(d), Vector<F>(d)}; }
  static AffineMap translate(Vector<F> t) { return {Matrix<F>::identity(t.size()), std::move(t)}; }
  /// Rotation by 180° about c.
  static AffineMap half_turn(const Vector<F>& c) {
    Matrix<F> m = Matrix<F>::identity(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) m(i, i) = F(-1);
    return {std::move(m), c * F(2)};
  }
  /// 2D rotation with the given cosine and sine, about the origin.
  static AffineMap rotation(const F& c, const F& s) {
    return {Matrix<F>::from_rows({{c, -s}, {s, c}}), Vector<F>(2)};
  }

  std::size_t dim() const { return translation.size(); }

  Vector<F> operator()(const Vector<F>& x) const { return linear * x + translation; }
  Vector<F> direction(const Vector<F>& v) const { return linear * v; }

  /// (this ∘ g)(x) = this(g(x)).
  AffineMap compose(const AffineMap& g) const { return {linear * g.linear, linear * g.translation + translation}; }

  AffineMap inverse() const {
    Matrix<F> inv = linear.inverse();
    return {inv, -(inv * translation)};
  }

  bool is_identity() const { return linear == Matrix<F>::identity(dim()) && translation.is_zero(); }

  /// Orientation-preserving isometry: MᵀM = I and det M = 1, exactly.
  bool is_rigid() const {
    return linear.transpose() * linear == Matrix<F>::identity(dim()) && linear.determinant() == F(1);
  }

  /// Pullback of an ambient functional: (ξ ∘ this⁻¹), so that ξ'(f(x)) = ξ(x).
  AffineFunctional<F> push_functional(const AffineFunctional<F>& xi) const {
    Matrix<F> inv = linear.inverse();
    Vector<F> lin(dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t i = 0; i < dim(); ++i) lin[j] = lin[j] + xi.linear[i] * inv(i, j);
    F c = xi.constant - dot(lin, translation);
    return {std::move(lin), std::move(c)};
  }

  friend bool operator==(const AffineMap&, const AffineMap&) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < dim(); ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < dim(); ++j) s += (j ? " " : "") + to_string(linear(i, j));
    }
    return s + "] + " + translation.str();
  }
};

template <OrderedField F>
Carrier<F> transform(const AffineMap<F>& g, const Carrier<F>& c) {
  std::vector<Vector<F>> dirs;
  for (const auto& b : c.basis()) dirs.push_back(g.direction(b));
  return Carrier<F>(g(c.base()), dirs);
}

template <OrderedField F>
Cell<F> transform(const AffineMap<F>& g, const Cell<F>& cell) {
  Carrier<F> image = transform(g, cell.carrier());
  std::vector<AffineFunctional<F>> fs;
  for (const auto& f : cell.constraints())
    fs.push_back(image.restrict(g.push_functional(cell.carrier().extend(f))));
  if (cell.contradictory()) fs.emplace_back(Vector<F>(image.dim()), F(0));
  return Cell<F>(std::move(image), std::move(fs));
}

template <OrderedField F>
RefinedPolytope<F> transform(const AffineMap<F>& g, const RefinedPolytope<F>& p) {
  std::vector<Cell<F>> cells;
  for (const auto& c : p.cells()) cells.push_back(transform(g, c));
  return RefinedPolytope<F>(p.rank(), p.ambient_dim(), std::move(cells));
}

template <OrderedField F>
RefinedPoint<F> transform(const AffineMap<F>& g, const RefinedPoint<F>& p) {
  std::vector<Vector<F>> flag;
  for (const auto& v : p.flag.vectors()) flag.push_back(g.direction(v));
  return RefinedPoint<F>(g(p.position), Flag<F>(p.position.size(), flag));
}

}  // namespace refgeo
