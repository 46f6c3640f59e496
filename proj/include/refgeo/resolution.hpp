#pragma once

// Refined points: a position together with a flag of independent directions.
//
// Flags are taken modulo the right action of upper-triangular matrices with
// positive diagonal (v_j -> c·v_j + Σ_{i<j} a_i v_i, c > 0). Only this orbit
// matters to the lexicographic sign semantics, so no orthonormalisation is
// ever needed and everything stays in the base field.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "refgeo/linalg.hpp"

namespace refgeo {

/// Canonical orbit representative: each vector has zeros at the pivots of the
/// earlier vectors and its own first nonzero coordinate equal to ±1.
template <OrderedField F>
std::vector<Vector<F>> canonicalize_flag(const std::vector<Vector<F>>& vectors) {
  std::vector<Vector<F>> out;
  std::vector<std::size_t> pivots;
  for (const auto& v : vectors) {
    if (!out.empty() && v.size() != out.front().size())
      throw DimensionMismatch("flag vectors of different sizes");
    Vector<F> w = v;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const F& c = w[pivots[i]];
      if (sign(c) != 0) w -= out[i] * (c / out[i][pivots[i]]);
    }
    std::size_t q = 0;
    while (q < w.size() && sign(w[q]) == 0) ++q;
    if (q == w.size()) throw DependentFlag("flag vectors are linearly dependent");
    w = w / abs_value(w[q]);
    out.push_back(std::move(w));
    pivots.push_back(q);
  }
  return out;
}

template <OrderedField F>
class Flag {
 public:
  explicit Flag(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}
  Flag(std::size_t ambient_dim, const std::vector<Vector<F>>& vectors)
      : dim_(ambient_dim), v_(canonicalize_flag(vectors)) {
    for (const auto& v : v_)
      if (v.size() != dim_) throw DimensionMismatch("flag vector size differs from ambient dimension");
  }
  explicit Flag(const std::vector<Vector<F>>& vectors)
      : Flag(vectors.empty() ? 0 : vectors.front().size(), vectors) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return v_.size(); }
  const Vector<F>& operator[](std::size_t i) const { return v_[i]; }
  const std::vector<Vector<F>>& vectors() const { return v_; }

  friend bool operator==(const Flag&, const Flag&) = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? ", " : "") + v_[i].str();
    return s + "]";
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Vector<F>> v_;
};

template <OrderedField F>
struct RefinedPoint {
  Vector<F> position;
  Flag<F> flag;

  RefinedPoint() = default;
  RefinedPoint(Vector<F> pos, Flag<F> f) : position(std::move(pos)), flag(std::move(f)) {
    if (flag.ambient_dim() != position.size() && flag.size() > 0)
      throw DimensionMismatch("flag and position live in different spaces");
  }
  RefinedPoint(Vector<F> pos, const std::vector<Vector<F>>& vs)
      : RefinedPoint(pos, Flag<F>(pos.size(), vs)) {}

  std::size_t level() const { return flag.size(); }
  friend bool operator==(const RefinedPoint&, const RefinedPoint&) = default;

  std::string str() const {
    return "point " + position.str() + " flag " + flag.str();
  }
};

struct SignSeq {
  std::vector<int> signs;
  friend bool operator==(const SignSeq&, const SignSeq&) = default;
};

/// True iff the first nonzero entry is +1; the zero tuple is not positive.
inline bool lex_positive(const SignSeq& s) {
  for (int v : s.signs)
    if (v != 0) return v > 0;
  return false;
}

/// Signs of (ξ(x), ξ(x+v1), ξ(x+v1+v2), ...).
template <OrderedField F>
SignSeq eval_refinement(const AffineFunctional<F>& xi, const Vector<F>& x,
                        const std::vector<Vector<F>>& flag) {
  if (xi.dim() != x.size()) throw DimensionMismatch("functional and point dimensions differ");
  SignSeq out;
  out.signs.reserve(flag.size() + 1);
  Vector<F> p = x;
  out.signs.push_back(sign(xi(p)));
  for (const auto& v : flag) {
    p += v;
    out.signs.push_back(sign(xi(p)));
  }
  return out;
}

template <OrderedField F>
SignSeq eval_refinement(const AffineFunctional<F>& xi, const RefinedPoint<F>& p) {
  return eval_refinement(xi, p.position, p.flag.vectors());
}

/// First nonzero of (ξ(x), Dξ(v1), Dξ(v2), ...) — same lexicographic class as
/// the definitional tuple, cheaper to evaluate.
template <OrderedField F>
bool refined_positive(const AffineFunctional<F>& xi, const Vector<F>& x,
                      const std::vector<Vector<F>>& flag) {
  int s = sign(xi(x));
  if (s != 0) return s > 0;
  for (const auto& v : flag) {
    s = sign(xi.derivative(v));
    if (s != 0) return s > 0;
  }
  return false;
}

namespace detail {
template <OrderedField F>
F ratio(long num, long den) {
  return F(num) / F(den);
}
}  // namespace detail

/// Deterministic pseudo-random refined point of a carrier with a full flag.
template <OrderedField F>
RefinedPoint<F> sample_refined_point(const Carrier<F>& carrier, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-24, 24), den(1, 6), coef(-3, 3);
  const std::size_t k = carrier.dim();
  Vector<F> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = detail::ratio<F>(num(rng), den(rng));
  std::vector<Vector<F>> intrinsic;
  for (;;) {
    intrinsic.clear();
    for (std::size_t j = 0; j < k; ++j) {
      Vector<F> w(k);
      for (std::size_t i = 0; i < k; ++i) w[i] = F(coef(rng));
      intrinsic.push_back(std::move(w));
    }
    if (rank(intrinsic) == k) break;
  }
  std::vector<Vector<F>> flag;
  for (const auto& w : intrinsic) flag.push_back(carrier.embed_direction(w));
  return RefinedPoint<F>(carrier.embed(t), Flag<F>(carrier.ambient_dim(), flag));
}

}  // namespace refgeo
