#pragma once

// Exact Fourier–Motzkin elimination for mixed strict / weak linear systems,
// with back-substitution producing a witness point.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "refgeo/linalg.hpp"

namespace refgeo {

/// coeffs·x + constant > 0 (strict) or >= 0.
template <OrderedField F>
struct Inequality {
  Vector<F> coeffs;
  F constant{0};
  bool strict = true;

  bool satisfied_by(const Vector<F>& x) const {
    int s = sign(dot(coeffs, x) + constant);
    return strict ? s > 0 : s >= 0;
  }
};

template <OrderedField F>
Inequality<F> strict_inequality(const AffineFunctional<F>& f) {
  return {f.linear, f.constant, true};
}
template <OrderedField F>
Inequality<F> weak_inequality(const AffineFunctional<F>& f) {
  return {f.linear, f.constant, false};
}

namespace detail {

// Scales so the first nonzero coefficient is ±1, and folds duplicates into the
// tighter row. Returns false if a variable-free row is violated.
template <OrderedField F>
bool normalize_system(std::vector<Inequality<F>>& rows) {
  std::vector<Inequality<F>> kept;
  kept.reserve(rows.size());
  for (auto& row : rows) {
    std::size_t lead = 0;
    while (lead < row.coeffs.size() && sign(row.coeffs[lead]) == 0) ++lead;
    if (lead == row.coeffs.size()) {
      int s = sign(row.constant);
      if (s < 0 || (s == 0 && row.strict)) return false;
      continue;
    }
    F scale = abs_value(row.coeffs[lead]);
    if (!(scale == F(1))) {
      F inv = F(1) / scale;
      row.coeffs *= inv;
      row.constant = row.constant * inv;
    }
    bool merged = false;
    for (auto& k : kept) {
      if (k.coeffs == row.coeffs) {
        int c = sign(row.constant - k.constant);
        if (c < 0 || (c == 0 && row.strict && !k.strict)) {
          k.constant = row.constant;
          k.strict = row.strict;
        }
        merged = true;
        break;
      }
    }
    if (!merged) kept.push_back(std::move(row));
  }
  rows = std::move(kept);
  return true;
}

}  // namespace detail

/// Returns a point satisfying every row, or nullopt if the system is infeasible.
template <OrderedField F>
std::optional<Vector<F>> fm_solve(std::vector<Inequality<F>> rows, std::size_t nvars) {
  for (const auto& r : rows)
    if (r.coeffs.size() != nvars) throw DimensionMismatch("inequality arity differs from variable count");
  if (!detail::normalize_system(rows)) return std::nullopt;

  std::vector<std::pair<std::size_t, std::vector<Inequality<F>>>> stages;
  std::vector<bool> done(nvars, false);
  for (std::size_t step = 0; step < nvars; ++step) {
    // Cheapest variable first: fewest generated rows.
    std::size_t best = nvars;
    long best_cost = 0;
    for (std::size_t j = 0; j < nvars; ++j) {
      if (done[j]) continue;
      long pos = 0, neg = 0;
      for (const auto& r : rows) {
        int s = sign(r.coeffs[j]);
        pos += s > 0;
        neg += s < 0;
      }
      long cost = pos * neg - pos - neg;
      if (best == nvars || cost < best_cost) {
        best = j;
        best_cost = cost;
      }
    }
    done[best] = true;
    std::vector<Inequality<F>> next, pos, neg;
    for (const auto& r : rows) {
      int s = sign(r.coeffs[best]);
      if (s == 0) next.push_back(r);
      else (s > 0 ? pos : neg).push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        F wp = -n.coeffs[best];
        F wn = p.coeffs[best];
        Inequality<F> c{p.coeffs * wp + n.coeffs * wn, p.constant * wp + n.constant * wn,
                        p.strict || n.strict};
        c.coeffs[best] = F(0);
        next.push_back(std::move(c));
      }
    stages.emplace_back(best, std::move(rows));
    rows = std::move(next);
    if (!detail::normalize_system(rows)) return std::nullopt;
  }

  Vector<F> x(nvars);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t j = it->first;
    std::optional<F> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& r : it->second) {
      int s = sign(r.coeffs[j]);
      if (s == 0) continue;
      F rest = r.constant;
      for (std::size_t i = 0; i < nvars; ++i)
        if (i != j) rest = rest + r.coeffs[i] * x[i];
      F bound = -rest / r.coeffs[j];
      if (s > 0) {
        int c = lo ? sign(bound - *lo) : 1;
        if (c > 0 || (c == 0 && r.strict)) {
          lo = bound;
          lo_strict = r.strict;
        }
      } else {
        int c = hi ? sign(bound - *hi) : -1;
        if (c < 0 || (c == 0 && r.strict)) {
          hi = bound;
          hi_strict = r.strict;
        }
      }
    }
    if (lo && hi) {
      int c = sign(*hi - *lo);
      if (c < 0 || (c == 0 && (lo_strict || hi_strict)))
        throw Error("internal: Fourier-Motzkin back-substitution found an empty interval");
      x[j] = c == 0 ? *lo : (*lo + *hi) / F(2);
    } else if (lo) {
      x[j] = *lo + F(1);
    } else if (hi) {
      x[j] = *hi - F(1);
    } else {
      x[j] = F(0);
    }
  }
  return x;
}

template <OrderedField F>
bool fm_feasible(std::vector<Inequality<F>> rows, std::size_t nvars) {
  return fm_solve(std::move(rows), nvars).has_value();
}

/// Dimension of {f_i >= 0 for all i} inside F^nvars; -1 when empty. The affine
/// hull is cut out by the implicit equalities: rows that cannot be made strict.
template <OrderedField F>
int weak_system_dimension(const std::vector<AffineFunctional<F>>& fs, std::size_t nvars) {
  std::vector<Inequality<F>> weak;
  for (const auto& f : fs) weak.push_back(weak_inequality(f));
  if (!fm_feasible(weak, nvars)) return -1;
  std::vector<Vector<F>> tight;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto sys = weak;
    sys[i].strict = true;
    if (!fm_feasible(std::move(sys), nvars)) tight.push_back(fs[i].linear);
  }
  return static_cast<int>(nvars) - static_cast<int>(rank(tight));
}

}  // namespace refgeo
