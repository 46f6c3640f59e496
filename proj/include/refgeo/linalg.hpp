#pragma once

// Exact vectors, affine functionals and affine subspaces ("carriers").

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "refgeo/error.hpp"
#include "refgeo/field.hpp"

namespace refgeo {

template <OrderedField F>
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : c_(n, F(0)) {}
  Vector(std::initializer_list<F> init) : c_(init) {}
  explicit Vector(std::vector<F> coords) : c_(std::move(coords)) {}

  static Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = F(1);
    return v;
  }

  std::size_t size() const { return c_.size(); }
  F& operator[](std::size_t i) { return c_[i]; }
  const F& operator[](std::size_t i) const { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  const std::vector<F>& coords() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const F& x) { return sign(x) == 0; });
  }

  Vector& operator+=(const Vector& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    return *this;
  }
  Vector& operator*=(const F& s) {
    for (auto& x : c_) x = x * s;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, const F& s) { return a *= s; }
  friend Vector operator*(const F& s, Vector a) { return a *= s; }
  friend Vector operator/(Vector a, const F& s) {
    F inv = F(1) / s;
    return a *= inv;
  }
  friend Vector operator-(Vector a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += to_string(c_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<F> c_;

  void check(const Vector& o) const {
    if (o.size() != size())
      throw DimensionMismatch("vector sizes " + std::to_string(size()) + " and " +
                              std::to_string(o.size()));
  }
};

template <OrderedField F>
F dot(const Vector<F>& a, const Vector<F>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product of mismatched vectors");
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

/// ξ(x) = linear·x + constant.
template <OrderedField F>
struct AffineFunctional {
  Vector<F> linear;
  F constant{0};

  AffineFunctional() = default;
  AffineFunctional(Vector<F> lin, F c) : linear(std::move(lin)), constant(std::move(c)) {}

  std::size_t dim() const { return linear.size(); }
  F operator()(const Vector<F>& x) const { return dot(linear, x) + constant; }
  /// Value of the linear part Dξ on a direction.
  F derivative(const Vector<F>& v) const { return dot(linear, v); }
  bool is_regular() const { return !linear.is_zero(); }

  friend AffineFunctional operator-(const AffineFunctional& f) { return {-f.linear, -f.constant}; }
  friend bool operator==(const AffineFunctional&, const AffineFunctional&) = default;

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < linear.size(); ++i) {
      s += to_string(linear[i]) + "*x" + std::to_string(i + 1) + " + ";
    }
    return s + to_string(constant);
  }
};

/// Reduced row echelon form with unit pivots. Zero rows are dropped.
template <OrderedField F>
struct Echelon {
  std::vector<Vector<F>> rows;
  std::vector<std::size_t> pivots;
};

template <OrderedField F>
Echelon<F> reduced_echelon(std::vector<Vector<F>> rows) {
  Echelon<F> out;
  if (rows.empty()) return out;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && sign(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    rows[r] = rows[r] / rows[r][col];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sign(rows[i][col]) == 0) continue;
      F factor = rows[i][col];
      rows[i] -= rows[r] * factor;
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

template <OrderedField F>
std::size_t rank(const std::vector<Vector<F>>& vectors) {
  return reduced_echelon(vectors).pivots.size();
}

/// Solution set of A x = h as particular solution + nullspace basis, or
/// nullopt when inconsistent. `rows` are the rows of A.
template <OrderedField F>
std::optional<std::pair<Vector<F>, std::vector<Vector<F>>>> solve_affine(
    const std::vector<Vector<F>>& rows, const std::vector<F>& rhs, std::size_t n) {
  std::vector<Vector<F>> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<F> c(rows[i].begin(), rows[i].end());
    c.push_back(rhs[i]);
    aug.emplace_back(std::move(c));
  }
  auto ech = reduced_echelon(std::move(aug));
  for (auto p : ech.pivots)
    if (p == n) return std::nullopt;
  Vector<F> particular(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    particular[ech.pivots[i]] = ech.rows[i][n];
    is_pivot[ech.pivots[i]] = true;
  }
  std::vector<Vector<F>> null;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(n);
    v[free] = F(1);
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.rows[i][free];
    null.push_back(std::move(v));
  }
  return std::make_pair(std::move(particular), std::move(null));
}

/// An affine subspace in canonical form: reduced-echelon direction basis and a
/// base point whose pivot coordinates are zero. Equal subspaces compare equal.
template <OrderedField F>
class Carrier {
 public:
  Carrier() = default;

  Carrier(Vector<F> point, std::vector<Vector<F>> directions) {
    for (const auto& d : directions)
      if (d.size() != point.size()) throw DimensionMismatch("carrier direction of wrong size");
    auto ech = reduced_echelon(std::move(directions));
    basis_ = std::move(ech.rows);
    pivots_ = std::move(ech.pivots);
    base_ = std::move(point);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      F c = base_[pivots_[i]];
      if (sign(c) != 0) base_ -= basis_[i] * c;
    }
  }

  static Carrier whole(std::size_t d) {
    std::vector<Vector<F>> dirs;
    for (std::size_t i = 0; i < d; ++i) dirs.push_back(Vector<F>::unit(d, i));
    return Carrier(Vector<F>(d), std::move(dirs));
  }
  static Carrier point(Vector<F> p) { return Carrier(std::move(p), {}); }

  std::size_t ambient_dim() const { return base_.size(); }
  std::size_t dim() const { return basis_.size(); }
  const Vector<F>& base() const { return base_; }
  const std::vector<Vector<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// The direction space as a carrier through the origin.
  Carrier direction_space() const {
    Carrier c = *this;
    c.base_ = Vector<F>(ambient_dim());
    return c;
  }

  Vector<F> embed(const Vector<F>& t) const {
    Vector<F> x = base_;
    for (std::size_t i = 0; i < basis_.size(); ++i) x += basis_[i] * t[i];
    return x;
  }
  Vector<F> embed_direction(const Vector<F>& w) const {
    Vector<F> v(ambient_dim());
    for (std::size_t i = 0; i < basis_.size(); ++i) v += basis_[i] * w[i];
    return v;
  }

  /// Intrinsic coordinates of x, or nullopt when x is off the carrier.
  std::optional<Vector<F>> coords(const Vector<F>& x) const {
    check(x);
    Vector<F> t(dim());
    for (std::size_t i = 0; i < dim(); ++i) t[i] = x[pivots_[i]] - base_[pivots_[i]];
    if (embed(t) != x) return std::nullopt;
    return t;
  }
  std::optional<Vector<F>> direction_coords(const Vector<F>& v) const {
    check(v);
    Vector<F> w(dim());
    for (std::size_t i = 0; i < dim(); ++i) w[i] = v[pivots_[i]];
    if (embed_direction(w) != v) return std::nullopt;
    return w;
  }
  bool contains(const Vector<F>& x) const { return coords(x).has_value(); }
  bool contains_direction(const Vector<F>& v) const { return direction_coords(v).has_value(); }

  /// Restriction of an ambient functional to intrinsic coordinates.
  AffineFunctional<F> restrict(const AffineFunctional<F>& xi) const {
    if (xi.dim() != ambient_dim()) throw DimensionMismatch("functional dimension differs from carrier");
    Vector<F> lin(dim());
    for (std::size_t i = 0; i < dim(); ++i) lin[i] = xi.derivative(basis_[i]);
    return {std::move(lin), xi(base_)};
  }

  /// An ambient functional agreeing with the intrinsic one on the carrier.
  AffineFunctional<F> extend(const AffineFunctional<F>& intrinsic) const {
    Vector<F> lin(ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i) lin[pivots_[i]] = intrinsic.linear[i];
    return {std::move(lin), intrinsic.constant};
  }

  /// Defining equations {x : row·x = rhs} of the subspace.
  std::pair<std::vector<Vector<F>>, std::vector<F>> equations() const {
    std::vector<Vector<F>> rows;
    std::vector<F> rhs;
    std::vector<bool> is_pivot(ambient_dim(), false);
    for (auto p : pivots_) is_pivot[p] = true;
    for (std::size_t j = 0; j < ambient_dim(); ++j) {
      if (is_pivot[j]) continue;
      Vector<F> row(ambient_dim());
      row[j] = F(1);
      for (std::size_t i = 0; i < dim(); ++i) row[pivots_[i]] = -basis_[i][j];
      rows.push_back(std::move(row));
      rhs.push_back(base_[j]);
    }
    return {rows, rhs};
  }

  std::optional<Carrier> intersect(const Carrier& other) const {
    if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("carrier ambient dimensions differ");
    auto [r1, h1] = equations();
    auto [r2, h2] = other.equations();
    r1.insert(r1.end(), r2.begin(), r2.end());
    h1.insert(h1.end(), h2.begin(), h2.end());
    auto sol = solve_affine(r1, h1, ambient_dim());
    if (!sol) return std::nullopt;
    return Carrier(std::move(sol->first), std::move(sol->second));
  }

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.base_ == b.base_ && a.basis_ == b.basis_;
  }

  std::string str() const {
    std::string s = "carrier{base " + base_.str() + ", dirs [";
    for (std::size_t i = 0; i < basis_.size(); ++i) s += (i ? ", " : "") + basis_[i].str();
    return s + "]}";
  }

 private:
  Vector<F> base_;
  std::vector<Vector<F>> basis_;
  std::vector<std::size_t> pivots_;

  void check(const Vector<F>& x) const {
    if (x.size() != ambient_dim()) throw DimensionMismatch("point dimension differs from carrier");
  }
};

template <OrderedField F>
Carrier<F> affine_hull(const std::vector<Vector<F>>& points) {
  if (points.empty()) throw DegenerateInput("affine hull of no points");
  std::vector<Vector<F>> dirs;
  for (std::size_t i = 1; i < points.size(); ++i) dirs.push_back(points[i] - points[0]);
  return Carrier<F>(points[0], std::move(dirs));
}

template <OrderedField F>
AffineFunctional<F> restrict_functional(const AffineFunctional<F>& xi, const Carrier<F>& carrier) {
  return carrier.restrict(xi);
}

/// Dense square matrix, row-major; enough for motions and flag maps.
template <OrderedField F>
struct Matrix {
  std::size_t n = 0;
  std::vector<F> a;

  Matrix() = default;
  explicit Matrix(std::size_t size) : n(size), a(size * size, F(0)) {}
  static Matrix identity(std::size_t size) {
    Matrix m(size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_rows(std::initializer_list<std::initializer_list<F>> rows) {
    Matrix m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
      std::size_t j = 0;
      for (const auto& x : row) m(i, j++) = x;
      ++i;
    }
    return m;
  }

  F& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  Vector<F> operator*(const Vector<F>& v) const {
    if (v.size() != n) throw DimensionMismatch("matrix-vector size mismatch");
    Vector<F> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      F s(0);
      for (std::size_t j = 0; j < n; ++j) s = s + (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }
  Matrix operator*(const Matrix& o) const {
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        F s(0);
        for (std::size_t k = 0; k < n; ++k) s = s + (*this)(i, k) * o(k, j);
        out(i, j) = s;
      }
    return out;
  }
  Matrix transpose() const {
    Matrix t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  F determinant() const {
    Matrix m = *this;
    F det(1);
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && sign(m(piv, col)) == 0) ++piv;
      if (piv == n) return F(0);
      if (piv != col) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
        det = -det;
      }
      det = det * m(col, col);
      for (std::size_t i = col + 1; i < n; ++i) {
        if (sign(m(i, col)) == 0) continue;
        F f = m(i, col) / m(col, col);
        for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
      }
    }
    return det;
  }
  Matrix inverse() const {
    std::vector<Vector<F>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<F> r(2 * n, F(0));
      for (std::size_t j = 0; j < n; ++j) r[j] = (*this)(i, j);
      r[n + i] = F(1);
      rows.emplace_back(std::move(r));
    }
    auto ech = reduced_echelon(std::move(rows));
    if (ech.pivots.size() < n || ech.pivots[n - 1] >= n) throw DegenerateInput("singular matrix");
    Matrix inv(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.rows[i][n + j];
    return inv;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

}  // namespace refgeo
