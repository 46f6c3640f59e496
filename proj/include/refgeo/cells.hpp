#pragma once

// Refined convex k-polytopes ("cells"): finitely many refined half-spaces
// {ξ̃ ≻ 0} inside a k-dimensional carrier, plus their conventional closures.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refgeo/fourier_motzkin.hpp"
#include "refgeo/resolution.hpp"

namespace refgeo {

/// A conventional convex piece: {ξ_i >= 0} inside a carrier (intrinsic coordinates).
template <OrderedField F>
struct ConvexPiece {
  Carrier<F> carrier;
  std::vector<AffineFunctional<F>> constraints;

  std::size_t carrier_dim() const { return carrier.dim(); }

  bool contains(const Vector<F>& x) const {
    auto t = carrier.coords(x);
    if (!t) return false;
    for (const auto& f : constraints)
      if (sign(f(*t)) < 0) return false;
    return true;
  }

  /// Dimension of the piece; -1 when empty.
  int rank() const { return weak_system_dimension(constraints, carrier.dim()); }

  bool has_relative_interior() const {
    std::vector<Inequality<F>> rows;
    for (const auto& f : constraints) rows.push_back(strict_inequality(f));
    return fm_feasible(std::move(rows), carrier.dim());
  }

  std::vector<AffineFunctional<F>> ambient_constraints() const {
    std::vector<AffineFunctional<F>> out;
    for (const auto& f : constraints) out.push_back(carrier.extend(f));
    return out;
  }
};

template <OrderedField F>
AffineFunctional<F> complement_halfspace(const AffineFunctional<F>& xi) {
  if (!xi.is_regular()) throw NonRegularFunctional("complement of a non-regular functional");
  return -xi;
}

template <OrderedField F>
class Cell {
 public:
  Cell() = default;

  /// Constraints are in the carrier's intrinsic coordinates. Constant ones are
  /// resolved immediately: c > 0 is dropped, c <= 0 makes the cell empty.
  Cell(Carrier<F> carrier, std::vector<AffineFunctional<F>> intrinsic)
      : carrier_(std::move(carrier)) {
    for (auto& f : intrinsic) {
      if (f.dim() != carrier_.dim()) throw DimensionMismatch("constraint arity differs from carrier dimension");
      if (f.is_regular()) {
        constraints_.push_back(std::move(f));
      } else if (sign(f.constant) <= 0) {
        contradictory_ = true;
      }
    }
  }

  static Cell from_ambient(Carrier<F> carrier, const std::vector<AffineFunctional<F>>& ambient) {
    std::vector<AffineFunctional<F>> intrinsic;
    for (const auto& f : ambient) intrinsic.push_back(carrier.restrict(f));
    return Cell(std::move(carrier), std::move(intrinsic));
  }

  /// The whole refined space of the carrier.
  static Cell full(Carrier<F> carrier) { return Cell(std::move(carrier), {}); }

  const Carrier<F>& carrier() const { return carrier_; }
  const std::vector<AffineFunctional<F>>& constraints() const { return constraints_; }
  std::size_t rank() const { return carrier_.dim(); }
  std::size_t ambient_dim() const { return carrier_.ambient_dim(); }
  bool contradictory() const { return contradictory_; }

  /// Intrinsic coordinates of a refined point, or nullopt when off the carrier.
  std::optional<std::pair<Vector<F>, std::vector<Vector<F>>>> localize(const RefinedPoint<F>& p) const {
    if (p.level() != rank())
      throw DimensionMismatch("refined point has flag length " + std::to_string(p.level()) +
                              ", cell rank is " + std::to_string(rank()));
    auto t = carrier_.coords(p.position);
    if (!t) return std::nullopt;
    std::vector<Vector<F>> w;
    for (const auto& v : p.flag.vectors()) {
      auto c = carrier_.direction_coords(v);
      if (!c) return std::nullopt;
      w.push_back(std::move(*c));
    }
    return std::make_pair(std::move(*t), std::move(w));
  }

  bool contains(const RefinedPoint<F>& p) const {
    if (contradictory_) {
      if (p.level() != rank()) throw DimensionMismatch("refined point level differs from cell rank");
      return false;
    }
    auto loc = localize(p);
    if (!loc) return false;
    for (const auto& f : constraints_)
      if (!refined_positive(f, loc->first, loc->second)) return false;
    return true;
  }

  /// An intrinsic point with every constraint strictly positive.
  std::optional<Vector<F>> interior_coords() const {
    if (contradictory_) return std::nullopt;
    std::vector<Inequality<F>> rows;
    for (const auto& f : constraints_) rows.push_back(strict_inequality(f));
    return fm_solve(std::move(rows), rank());
  }

  bool is_empty() const { return !interior_coords().has_value(); }

  std::optional<Vector<F>> interior_point() const {
    auto t = interior_coords();
    if (!t) return std::nullopt;
    return carrier_.embed(*t);
  }

  /// A refined point of the cell: an interior position with the carrier basis as flag.
  std::optional<RefinedPoint<F>> witness() const {
    auto x = interior_point();
    if (!x) return std::nullopt;
    return RefinedPoint<F>(*x, Flag<F>(ambient_dim(), carrier_.basis()));
  }

  ConvexPiece<F> closure() const {
    if (is_empty()) throw EmptyCellError("closure of an empty refined cell is not its image");
    return {carrier_, constraints_};
  }

  Cell with(const AffineFunctional<F>& intrinsic) const {
    Cell c = *this;
    if (intrinsic.is_regular()) c.constraints_.push_back(intrinsic);
    else if (sign(intrinsic.constant) <= 0) c.contradictory_ = true;
    return c;
  }

  /// Same-carrier intersection by concatenation; distinct carriers give nullopt
  /// (their refined spaces are disjoint).
  std::optional<Cell> intersect(const Cell& other) const {
    if (!(carrier_ == other.carrier_)) return std::nullopt;
    Cell c = *this;
    c.contradictory_ = contradictory_ || other.contradictory_;
    c.constraints_.insert(c.constraints_.end(), other.constraints_.begin(), other.constraints_.end());
    return c;
  }

  std::string str() const {
    std::string s = "cell on " + carrier_.str() + " {";
    for (std::size_t i = 0; i < constraints_.size(); ++i) s += (i ? "; " : "") + constraints_[i].str();
    if (contradictory_) s += (constraints_.empty() ? "" : "; ") + std::string("false");
    return s + "}";
  }

 private:
  Carrier<F> carrier_;
  std::vector<AffineFunctional<F>> constraints_;
  bool contradictory_ = false;
};

template <OrderedField F>
bool cell_contains(const Cell<F>& c, const RefinedPoint<F>& p) {
  return c.contains(p);
}
template <OrderedField F>
bool cell_is_empty(const Cell<F>& c) {
  return c.is_empty();
}
template <OrderedField F>
ConvexPiece<F> cell_closure(const Cell<F>& c) {
  return c.closure();
}

/// Walks from a refined point of the cell into the open interior along its
/// flag: y = x + c_1ρ_1 + ... + c_kρ_k with 0 < c_l < bound, each c_l chosen
/// small enough that no constraint positive so far turns negative.
template <OrderedField F>
std::optional<Vector<F>> step_into_interior(const Cell<F>& cell, const RefinedPoint<F>& p,
                                            const F& bound = F(1)) {
  if (!cell.contains(p)) return std::nullopt;
  auto loc = cell.localize(p);
  Vector<F> z = loc->first;
  for (const auto& rho : loc->second) {
    F c = bound;
    for (const auto& f : cell.constraints()) {
      F here = f(z);
      F slope = f.derivative(rho);
      if (sign(here) > 0 && sign(slope) < 0) {
        F limit = here / (-slope);
        if (limit < c) c = limit;
      }
    }
    z += rho * (c / F(2));
  }
  for (const auto& f : cell.constraints())
    if (sign(f(z)) <= 0) throw Error("internal: interior step left the open cell");
  return cell.carrier().embed(z);
}

}  // namespace refgeo
