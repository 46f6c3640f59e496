#pragma once

// Arbitrary-precision rationals. Thin value wrapper around mpq_class so that
// gmpxx expression templates never leak into `auto` deductions downstream.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "refgeo/error.hpp"
#include "refgeo/printable.hpp"

namespace refgeo {

class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(implicit)
  Rational(long v) : v_(v) {}  // NOLINT(implicit)
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit), LP64
  Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  /// Parses "n" or "p/q" with optional sign. Throws ParseError.
  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal", 0, 0);
    auto valid = [](const std::string& part, bool allow_sign) {
      if (part.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
      if (i == part.size()) return false;
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') return false;
      return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num, true) || !valid(den, false))
      throw ParseError("malformed rational literal '" + s + "'", 0, 0);
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw DivisionByZero("rational literal with zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1 / v_));
  }
  /// Largest integer <= value.
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }
  mpz_class ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const {
    std::hash<std::string> h;
    return h(v_.get_str(16));
  }

 private:
  mpq_class v_;
};

inline int sign(const Rational& r) { return r.sign(); }
inline double to_double(const Rational& r) { return r.to_double(); }
inline std::string to_string(const Rational& r) { return r.str(); }

/// Exact square root when r is the square of a rational.
inline bool rational_sqrt(const Rational& r, Rational& out) {
  if (r.sign() < 0) return false;
  mpz_class n = r.numerator(), d = r.denominator();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
    return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  out = Rational(mpq_class(sn, sd));
  return true;
}

}  // namespace refgeo
