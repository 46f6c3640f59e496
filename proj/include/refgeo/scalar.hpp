#pragma once

// Exact real numbers in a dynamically grown tower of quadratic extensions
//   Q ⊂ Q(√r1) ⊂ Q(√r1)(√r2) ⊂ ...
// A value at level n is a + b·√r_n with a, b at lower levels. Each element
// carries its own radicand chain; mixed-chain arithmetic first merges the two
// chains, collapsing radicands that turn out to be squares in the merged field.
//
// Representation invariants:
//   * at a non-rational level b != 0 (otherwise the value collapses to a);
//   * every radicand is positive and not a square in the field below it.
// Together these make the representation canonical for a fixed chain, so sign
// and equality are decided exactly by recursion.

#include <cctype>
#include <cmath>
#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refgeo/error.hpp"
#include "refgeo/rational.hpp"

namespace refgeo {

class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}                 // NOLINT(implicit)
  Scalar(long v) : q_(v) {}                // NOLINT(implicit)
  Scalar(long long v) : q_(v) {}           // NOLINT(implicit)
  Scalar(const Rational& q) : q_(q) {}     // NOLINT(implicit)
  Scalar(long num, long den) : q_(num, den) {}

  /// Square root of a nonnegative value. Grows the tower only when the
  /// radicand is not already a square in its own field.
  static Scalar sqrt(const Scalar& r);

  /// Parses the literal grammar: integers, p/q, sqrt(...), + - * / and parens.
  static Scalar parse(std::string_view text);

  bool is_rational() const { return level_ == nullptr; }
  /// Only meaningful when is_rational().
  const Rational& rational() const { return q_; }
  std::size_t depth() const { return depth_of(level_); }

  int sign() const;
  bool is_zero() const { return !level_ && q_.is_zero(); }

  double to_double() const;

  /// Literal form that parse() reads back to an equal value.
  std::string str() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    if (!x.level_ && !y.level_) return Scalar(x.q_ + y.q_);
    auto [u, v] = unify(x, y);
    return add_c(u, v);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    if (!x.level_ && !y.level_) return Scalar(x.q_ - y.q_);
    auto [u, v] = unify(x, y);
    return sub_c(u, v);
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    if (!x.level_ && !y.level_) return Scalar(x.q_ * y.q_);
    auto [u, v] = unify(x, y);
    return mul_c(u, v);
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) throw DivisionByZero("scalar division by zero");
    if (!x.level_ && !y.level_) return Scalar(x.q_ / y.q_);
    auto [u, v] = unify(x, y);
    return mul_c(u, inverse_c(v));
  }
  friend Scalar operator-(const Scalar& x) { return neg_c(x); }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    if (!x.level_ && !y.level_) return x.q_ == y.q_;
    return (x - y).sign() == 0;
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    int s = (!x.level_ && !y.level_) ? (x.q_ - y.q_).sign() : (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Level;
  using LevelPtr = std::shared_ptr<const Level>;
  struct Parts;

  LevelPtr level_;
  Rational q_;
  std::shared_ptr<const Parts> parts_;

  const Scalar& a() const;
  const Scalar& b() const;

  static std::size_t depth_of(const LevelPtr& l);

  static Scalar make(const LevelPtr& lvl, Scalar a, Scalar b);
  static Scalar generator(const LevelPtr& lvl) { return make(lvl, Scalar(), Scalar(1)); }
  static Scalar positive(const Scalar& s) { return s.sign() < 0 ? neg_c(s) : s; }

  static bool same_level(const LevelPtr& x, const LevelPtr& y);
  static bool identical(const Scalar& x, const Scalar& y);
  static bool ancestor_or_equal(const LevelPtr& anc, LevelPtr x);
  static std::pair<Scalar, Scalar> unify(const Scalar& x, const Scalar& y);
  static Scalar embed(const Scalar& e, const LevelPtr& common,
                      const std::vector<std::pair<LevelPtr, Scalar>>& mapping);
  static std::optional<Scalar> sqrt_in(const Scalar& r, const LevelPtr& field);

  // Arithmetic on operands whose levels are known to be comparable.
  static Scalar add_c(const Scalar& x, const Scalar& y);
  static Scalar sub_c(const Scalar& x, const Scalar& y) { return add_c(x, neg_c(y)); }
  static Scalar neg_c(const Scalar& x);
  static Scalar mul_c(const Scalar& x, const Scalar& y);
  static Scalar inverse_c(const Scalar& x);
};

struct Scalar::Level {
  Scalar radicand;
  LevelPtr parent;
  std::size_t depth = 0;
};

struct Scalar::Parts {
  Scalar a;
  Scalar b;
};

inline Scalar Scalar::sqrt(const Scalar& r) {
  int s = r.sign();
  if (s < 0) throw NegativeRadicand("square root of negative value " + r.str());
  if (s == 0) return Scalar();
  if (auto root = sqrt_in(r, r.level_)) return positive(*root);
  auto lvl = std::make_shared<Level>();
  lvl->radicand = r;
  lvl->parent = r.level_;
  lvl->depth = depth_of(r.level_) + 1;
  return generator(lvl);
}

inline int Scalar::sign() const {
  if (!level_) return q_.sign();
  int sa = a().sign();
  int sb = b().sign();
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  Scalar d = sub_c(mul_c(a(), a()), mul_c(mul_c(b(), b()), level_->radicand));
  return sa * d.sign();
}

inline double Scalar::to_double() const {
  if (!level_) return q_.to_double();
  return a().to_double() + b().to_double() * std::sqrt(level_->radicand.to_double());
}

inline std::string Scalar::str() const {
  if (!level_) return q_.str();
  std::string root = "sqrt(" + level_->radicand.str() + ")";
  std::string tail;
  if (b().is_rational() && b().rational() == Rational(1)) {
    tail = root;
  } else if (b().is_rational() && b().rational() == Rational(-1)) {
    tail = "-" + root;
  } else {
    tail = "(" + b().str() + ")*" + root;
  }
  if (a().is_zero()) return tail;
  return "(" + a().str() + ") + " + tail;
}

inline const Scalar& Scalar::a() const { return parts_->a; }
inline const Scalar& Scalar::b() const { return parts_->b; }

inline std::size_t Scalar::depth_of(const LevelPtr& l) { return l ? l->depth : 0; }

inline Scalar Scalar::make(const LevelPtr& lvl, Scalar a, Scalar b) {
  if (b.is_zero()) return a;
  Scalar s;
  s.level_ = lvl;
  s.parts_ = std::make_shared<const Parts>(Parts{std::move(a), std::move(b)});
  return s;
}

inline bool Scalar::identical(const Scalar& x, const Scalar& y) {
  if (!x.level_ || !y.level_) return !x.level_ && !y.level_ && x.q_ == y.q_;
  return same_level(x.level_, y.level_) && identical(x.a(), y.a()) && identical(x.b(), y.b());
}

inline bool Scalar::same_level(const LevelPtr& x, const LevelPtr& y) {
  if (x == y) return true;
  if (!x || !y || x->depth != y->depth) return false;
  return identical(x->radicand, y->radicand) && same_level(x->parent, y->parent);
}

inline bool Scalar::ancestor_or_equal(const LevelPtr& anc, LevelPtr x) {
  std::size_t d = depth_of(anc);
  while (depth_of(x) > d) x = x->parent;
  return same_level(anc, x);
}

inline Scalar Scalar::embed(const Scalar& e, const LevelPtr& common,
                            const std::vector<std::pair<LevelPtr, Scalar>>& mapping) {
  if (!e.level_ || ancestor_or_equal(e.level_, common)) return e;
  for (const auto& [lvl, image] : mapping) {
    if (same_level(lvl, e.level_)) {
      Scalar a = embed(e.a(), common, mapping);
      Scalar b = embed(e.b(), common, mapping);
      return add_c(a, mul_c(b, image));
    }
  }
  throw Error("internal: scalar level outside of merge mapping");
}

inline std::pair<Scalar, Scalar> Scalar::unify(const Scalar& x, const Scalar& y) {
  if (!x.level_ || !y.level_) return {x, y};
  if (x.level_ == y.level_) return {x, y};
  if (ancestor_or_equal(x.level_, y.level_) || ancestor_or_equal(y.level_, x.level_)) return {x, y};

  // Deepest common ancestor of the two chains.
  LevelPtr cx = x.level_, cy = y.level_;
  while (depth_of(cx) > depth_of(cy)) cx = cx->parent;
  while (depth_of(cy) > depth_of(cx)) cy = cy->parent;
  while (!same_level(cx, cy)) {
    cx = cx->parent;
    cy = cy->parent;
  }
  LevelPtr common = cx;

  std::vector<LevelPtr> pending;
  for (LevelPtr l = y.level_; depth_of(l) > depth_of(common); l = l->parent) pending.push_back(l);

  LevelPtr merged = x.level_;
  std::vector<std::pair<LevelPtr, Scalar>> mapping;
  for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
    Scalar rad = embed((*it)->radicand, common, mapping);
    if (auto root = sqrt_in(rad, merged)) {
      mapping.emplace_back(*it, positive(*root));
    } else {
      auto lvl = std::make_shared<Level>();
      lvl->radicand = rad;
      lvl->parent = merged;
      lvl->depth = depth_of(merged) + 1;
      merged = lvl;
      mapping.emplace_back(*it, generator(merged));
    }
  }
  return {x, embed(y, common, mapping)};
}

inline std::optional<Scalar> Scalar::sqrt_in(const Scalar& r, const LevelPtr& field) {
  if (!field) {
    if (r.level_) return std::nullopt;
    Rational root;
    if (rational_sqrt(r.q_, root)) return Scalar(root);
    return std::nullopt;
  }
  const Scalar& t = field->radicand;
  if (depth_of(r.level_) < field->depth) {
    if (auto s = sqrt_in(r, field->parent)) return s;
    if (auto s = sqrt_in(mul_c(r, inverse_c(t)), field->parent)) return make(field, Scalar(), *s);
    return std::nullopt;
  }
  // (p + q√t)² = a + b√t  ⇔  p² + q²t = a, 2pq = b.
  const Scalar& a = r.a();
  const Scalar& b = r.b();
  auto n = sqrt_in(sub_c(mul_c(a, a), mul_c(mul_c(b, b), t)), field->parent);
  if (!n) return std::nullopt;
  for (const Scalar& cand : {*n, neg_c(*n)}) {
    Scalar half = mul_c(add_c(a, cand), Scalar(1, 2));
    auto p = sqrt_in(half, field->parent);
    if (p && !p->is_zero()) {
      Scalar q = mul_c(b, inverse_c(mul_c(Scalar(2), *p)));
      return make(field, *p, q);
    }
  }
  return std::nullopt;
}

inline Scalar Scalar::add_c(const Scalar& x, const Scalar& y) {
  if (!x.level_ && !y.level_) return Scalar(x.q_ + y.q_);
  std::size_t dx = x.depth(), dy = y.depth();
  if (dx > dy) return make(x.level_, add_c(x.a(), y), x.b());
  if (dy > dx) return make(y.level_, add_c(x, y.a()), y.b());
  return make(x.level_, add_c(x.a(), y.a()), add_c(x.b(), y.b()));
}

inline Scalar Scalar::neg_c(const Scalar& x) {
  if (!x.level_) return Scalar(-x.q_);
  return make(x.level_, neg_c(x.a()), neg_c(x.b()));
}

inline Scalar Scalar::mul_c(const Scalar& x, const Scalar& y) {
  if (!x.level_ && !y.level_) return Scalar(x.q_ * y.q_);
  std::size_t dx = x.depth(), dy = y.depth();
  if (dx > dy) return make(x.level_, mul_c(x.a(), y), mul_c(x.b(), y));
  if (dy > dx) return make(y.level_, mul_c(x, y.a()), mul_c(x, y.b()));
  const Scalar& r = x.level_->radicand;
  Scalar a = add_c(mul_c(x.a(), y.a()), mul_c(mul_c(x.b(), y.b()), r));
  Scalar b = add_c(mul_c(x.a(), y.b()), mul_c(x.b(), y.a()));
  return make(x.level_, std::move(a), std::move(b));
}

inline Scalar Scalar::inverse_c(const Scalar& x) {
  if (!x.level_) {
    if (x.q_.is_zero()) throw DivisionByZero("scalar division by zero");
    return Scalar(x.q_.inverse());
  }
  const Scalar& r = x.level_->radicand;
  Scalar norm = sub_c(mul_c(x.a(), x.a()), mul_c(mul_c(x.b(), x.b()), r));
  Scalar inv = inverse_c(norm);
  return make(x.level_, mul_c(x.a(), inv), neg_c(mul_c(x.b(), inv)));
}

namespace detail {

// Recursive-descent reader for scalar literals; shared with the scenario parser.
class ScalarReader {
 public:
  explicit ScalarReader(std::string_view text, std::size_t pos = 0) : s_(text), pos_(pos) {}

  Scalar expression() {
    Scalar v = term();
    for (;;) {
      skip();
      if (peek() == '+') { ++pos_; v = v + term(); }
      else if (peek() == '-') { ++pos_; v = v - term(); }
      else return v;
    }
  }

  std::size_t position() const { return pos_; }
  bool at_end() { skip(); return pos_ >= s_.size(); }

 private:
  std::string_view s_;
  std::size_t pos_;

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 0, static_cast<int>(pos_) + 1);
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      skip();
      if (peek() == '*') { ++pos_; v = v * factor(); }
      else if (peek() == '/') { ++pos_; v = v / factor(); }
      else return v;
    }
  }

  Scalar factor() {
    skip();
    char c = peek();
    if (c == '-') { ++pos_; return -factor(); }
    if (c == '+') { ++pos_; return factor(); }
    if (c == '(') {
      ++pos_;
      Scalar v = expression();
      skip();
      if (peek() != ')') fail("expected ')' in scalar literal");
      ++pos_;
      return v;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      skip();
      if (peek() != '(') fail("expected '(' after sqrt");
      ++pos_;
      Scalar v = expression();
      skip();
      if (peek() != ')') fail("expected ')' closing sqrt");
      ++pos_;
      return Scalar::sqrt(v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Scalar(Rational::parse(s_.substr(start, pos_ - start)));
    }
    fail(c == '\0' ? "unexpected end of scalar literal"
                   : std::string("unexpected character '") + c + "' in scalar literal");
  }
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  detail::ScalarReader reader(text);
  Scalar v = reader.expression();
  if (!reader.at_end())
    throw ParseError("trailing characters in scalar literal", 0, static_cast<int>(reader.position()) + 1);
  return v;
}

inline int sign(const Scalar& s) { return s.sign(); }
inline double to_double(const Scalar& s) { return s.to_double(); }
inline std::string to_string(const Scalar& s) { return s.str(); }

}  // namespace refgeo
