#pragma once

// Refined k-polytopes as finite unions of cells, grouped by carrier, with the
// boolean algebra, closing map, lift and the decision procedures built on
// cell emptiness.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refgeo/cells.hpp"

namespace refgeo {

/// A conventional pure k-polytope: a union of convex pieces.
template <OrderedField F>
struct ConventionalPolytope {
  std::size_t rank = 0;
  std::size_t ambient_dim = 0;
  std::vector<ConvexPiece<F>> pieces;

  bool contains(const Vector<F>& x) const {
    for (const auto& p : pieces)
      if (p.contains(x)) return true;
    return false;
  }
  bool empty() const { return pieces.empty(); }
};

template <OrderedField F>
class RefinedPolytope {
 public:
  RefinedPolytope() = default;
  RefinedPolytope(std::size_t rank, std::size_t ambient_dim) : rank_(rank), dim_(ambient_dim) {}

  /// Validates carrier dimensions, drops empty cells and groups by carrier.
  RefinedPolytope(std::size_t rank, std::size_t ambient_dim, std::vector<Cell<F>> cells)
      : rank_(rank), dim_(ambient_dim) {
    for (auto& c : cells) add(std::move(c));
  }

  static RefinedPolytope from_cell(Cell<F> c) {
    RefinedPolytope p(c.rank(), c.ambient_dim());
    p.add(std::move(c));
    return p;
  }

  std::size_t rank() const { return rank_; }
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Cell<F>>& cells() const { return cells_; }
  bool is_empty() const { return cells_.empty(); }

  /// Distinct carriers in grouping order.
  std::vector<Carrier<F>> carriers() const {
    std::vector<Carrier<F>> out;
    for (const auto& c : cells_)
      if (out.empty() || !(out.back() == c.carrier())) out.push_back(c.carrier());
    return out;
  }

  bool contains(const RefinedPoint<F>& p) const {
    if (p.level() != rank_)
      throw DimensionMismatch("refined point level " + std::to_string(p.level()) +
                              " differs from polytope rank " + std::to_string(rank_));
    if (p.position.size() != dim_) throw DimensionMismatch("refined point in a different ambient space");
    for (const auto& c : cells_)
      if (c.contains(p)) return true;
    return false;
  }

  std::optional<RefinedPoint<F>> witness() const {
    if (cells_.empty()) return std::nullopt;
    return cells_.front().witness();
  }

  std::string str() const {
    std::string s = "refined " + std::to_string(rank_) + "-polytope (" + std::to_string(cells_.size()) + " cells)";
    for (const auto& c : cells_) s += "\n  " + c.str();
    return s;
  }

 private:
  void add(Cell<F> c) {
    if (c.rank() != rank_)
      throw RankMismatch("cell of rank " + std::to_string(c.rank()) + " in a rank-" + std::to_string(rank_) +
                         " polytope");
    if (c.ambient_dim() != dim_) throw DimensionMismatch("cell in a different ambient space");
    if (c.is_empty()) return;
    auto it = std::find_if(cells_.rbegin(), cells_.rend(),
                           [&](const Cell<F>& o) { return o.carrier() == c.carrier(); });
    cells_.insert(it.base(), std::move(c));
  }

  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<Cell<F>> cells_;
};

namespace detail {

template <OrderedField F>
void check_compatible(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  if (p.rank() != q.rank())
    throw RankMismatch("ranks " + std::to_string(p.rank()) + " and " + std::to_string(q.rank()));
  if (p.ambient_dim() != q.ambient_dim()) throw DimensionMismatch("polytopes in different ambient spaces");
}

// p minus q for same-carrier cells, as disjoint pieces
// p ∩ {e1..e_{j-1} ≻ 0} ∩ {−e_j ≻ 0}.
template <OrderedField F>
void subtract_cell(const Cell<F>& p, const Cell<F>& q, std::vector<Cell<F>>& out) {
  if (q.contradictory()) {
    out.push_back(p);
    return;
  }
  if (auto both = p.intersect(q); !both || both->is_empty()) {
    out.push_back(p);
    return;
  }
  Cell<F> acc = p;
  for (const auto& e : q.constraints()) {
    Cell<F> piece = acc.with(complement_halfspace(e));
    if (!piece.is_empty()) out.push_back(std::move(piece));
    acc = acc.with(e);
    if (acc.is_empty()) break;
  }
}

}  // namespace detail

template <OrderedField F>
RefinedPolytope<F> unite(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  detail::check_compatible(p, q);
  std::vector<Cell<F>> cells = p.cells();
  cells.insert(cells.end(), q.cells().begin(), q.cells().end());
  return RefinedPolytope<F>(p.rank(), p.ambient_dim(), std::move(cells));
}

template <OrderedField F>
RefinedPolytope<F> unite_all(std::size_t rank, std::size_t dim, const std::vector<RefinedPolytope<F>>& parts) {
  RefinedPolytope<F> acc(rank, dim);
  for (const auto& p : parts) acc = unite(acc, p);
  return acc;
}

template <OrderedField F>
RefinedPolytope<F> intersect(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  detail::check_compatible(p, q);
  std::vector<Cell<F>> cells;
  for (const auto& a : p.cells())
    for (const auto& b : q.cells())
      if (auto c = a.intersect(b)) cells.push_back(std::move(*c));
  return RefinedPolytope<F>(p.rank(), p.ambient_dim(), std::move(cells));
}

template <OrderedField F>
RefinedPolytope<F> difference(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  detail::check_compatible(p, q);
  std::vector<Cell<F>> result;
  for (const auto& a : p.cells()) {
    std::vector<Cell<F>> frags{a};
    for (const auto& b : q.cells()) {
      if (!(b.carrier() == a.carrier())) continue;
      std::vector<Cell<F>> next;
      for (const auto& f : frags) detail::subtract_cell(f, b, next);
      frags = std::move(next);
      if (frags.empty()) break;
    }
    result.insert(result.end(), frags.begin(), frags.end());
  }
  return RefinedPolytope<F>(p.rank(), p.ambient_dim(), std::move(result));
}

template <OrderedField F>
bool contains_point(const RefinedPolytope<F>& p, const RefinedPoint<F>& x) {
  return p.contains(x);
}

template <OrderedField F>
bool is_empty(const RefinedPolytope<F>& p) {
  return p.is_empty();
}

/// A refined point of P outside Q, if any.
template <OrderedField F>
std::optional<RefinedPoint<F>> subset_witness(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  return difference(p, q).witness();
}

template <OrderedField F>
bool is_subset(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  return !subset_witness(p, q).has_value();
}

/// A refined point in the symmetric difference, if any.
template <OrderedField F>
std::optional<RefinedPoint<F>> equality_witness(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  if (auto w = subset_witness(p, q)) return w;
  return subset_witness(q, p);
}

template <OrderedField F>
bool equals(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  return !equality_witness(p, q).has_value();
}

template <OrderedField F>
bool disjoint(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  return intersect(p, q).is_empty();
}

template <OrderedField F>
ConventionalPolytope<F> closing(const RefinedPolytope<F>& p) {
  ConventionalPolytope<F> out{p.rank(), p.ambient_dim(), {}};
  for (const auto& c : p.cells()) out.pieces.push_back(c.closure());
  return out;
}

/// The same convex set re-expressed on its own affine hull. Implicit equalities
/// (constraints tight everywhere on the piece) are dropped. Requires nonempty.
template <OrderedField F>
ConvexPiece<F> on_affine_hull(const ConvexPiece<F>& piece) {
  const std::size_t k = piece.carrier.dim();
  std::vector<Inequality<F>> weak;
  for (const auto& f : piece.constraints) weak.push_back(weak_inequality(f));
  auto x = fm_solve(weak, k);
  if (!x) throw EmptyCellError("affine hull of an empty piece");
  std::vector<Vector<F>> tight;
  std::vector<bool> is_tight(piece.constraints.size(), false);
  for (std::size_t i = 0; i < piece.constraints.size(); ++i) {
    auto sys = weak;
    sys[i].strict = true;
    if (!fm_feasible(std::move(sys), k)) {
      is_tight[i] = true;
      tight.push_back(piece.constraints[i].linear);
    }
  }
  if (tight.empty()) return piece;
  auto sol = solve_affine(tight, std::vector<F>(tight.size(), F(0)), k);
  std::vector<Vector<F>> dirs;
  for (const auto& w : sol->second) dirs.push_back(piece.carrier.embed_direction(w));
  Carrier<F> hull(piece.carrier.embed(*x), dirs);
  ConvexPiece<F> out{hull, {}};
  for (std::size_t i = 0; i < piece.constraints.size(); ++i) {
    if (is_tight[i]) continue;
    auto f = hull.restrict(piece.carrier.extend(piece.constraints[i]));
    if (f.is_regular()) out.constraints.push_back(std::move(f));
  }
  return out;
}

/// Replaces every weak inequality by the corresponding refined half-space.
template <OrderedField F>
RefinedPolytope<F> lift(const ConventionalPolytope<F>& c) {
  std::vector<Cell<F>> cells;
  for (std::size_t i = 0; i < c.pieces.size(); ++i) {
    const auto& piece = c.pieces[i];
    if (piece.carrier.ambient_dim() != c.ambient_dim) throw DimensionMismatch("piece in a different ambient space");
    int r = piece.rank();
    if (r != static_cast<int>(c.rank)) throw ImpurePolytope(i, r, static_cast<int>(c.rank));
    auto hull = piece.carrier.dim() == c.rank ? piece : on_affine_hull(piece);
    cells.emplace_back(hull.carrier, hull.constraints);
  }
  return RefinedPolytope<F>(c.rank, c.ambient_dim, std::move(cells));
}

template <OrderedField F>
RefinedPolytope<F> lift(const ConvexPiece<F>& piece, std::size_t rank) {
  return lift(ConventionalPolytope<F>{rank, piece.carrier.ambient_dim(), {piece}});
}

/// Dimension of the intersection of two convex pieces; -1 when empty.
template <OrderedField F>
int intersection_rank(const ConvexPiece<F>& a, const ConvexPiece<F>& b) {
  auto common = a.carrier.intersect(b.carrier);
  if (!common) return -1;
  std::vector<AffineFunctional<F>> fs;
  for (const auto& f : a.constraints) fs.push_back(common->restrict(a.carrier.extend(f)));
  for (const auto& f : b.constraints) fs.push_back(common->restrict(b.carrier.extend(f)));
  return weak_system_dimension(fs, common->dim());
}

/// Rank of closing(P) ∩ closing(Q); -1 when the closures do not meet.
template <OrderedField F>
int closure_intersection_rank(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  detail::check_compatible(p, q);
  int best = -1;
  for (const auto& a : p.cells())
    for (const auto& b : q.cells()) best = std::max(best, intersection_rank(a.closure(), b.closure()));
  return best;
}

template <OrderedField F>
bool rank_drop_check(const RefinedPolytope<F>& p, const RefinedPolytope<F>& q) {
  return closure_intersection_rank(p, q) < static_cast<int>(p.rank());
}

template <OrderedField F>
struct PartitionReport {
  bool ok = true;
  /// Indices of two overlapping parts, when disjointness fails.
  std::optional<std::pair<std::size_t, std::size_t>> overlap;
  /// A refined point demonstrating the failure.
  std::optional<RefinedPoint<F>> witness;
  std::string message;
};

template <OrderedField F>
PartitionReport<F> partition_report(const std::vector<RefinedPolytope<F>>& parts, const RefinedPolytope<F>& whole) {
  PartitionReport<F> r;
  for (const auto& p : parts) detail::check_compatible(p, whole);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      auto w = intersect(parts[i], parts[j]).witness();
      if (w) {
        r.ok = false;
        r.overlap = {i, j};
        r.witness = w;
        r.message = "parts " + std::to_string(i) + " and " + std::to_string(j) + " overlap";
        return r;
      }
    }
  auto u = unite_all(whole.rank(), whole.ambient_dim(), parts);
  if (auto w = subset_witness(whole, u)) {
    r.ok = false;
    r.witness = w;
    r.message = "parts do not cover the whole";
    return r;
  }
  if (auto w = subset_witness(u, whole)) {
    r.ok = false;
    r.witness = w;
    r.message = "parts extend outside the whole";
    return r;
  }
  r.message = "partition holds";
  return r;
}

template <OrderedField F>
bool partition_check(const std::vector<RefinedPolytope<F>>& parts, const RefinedPolytope<F>& whole) {
  return partition_report(parts, whole).ok;
}

}  // namespace refgeo
