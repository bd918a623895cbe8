#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pltopo {

/// Exact rational number in canonical form: den > 0 and gcd(|num|, den) = 1.
///
/// Backed by GMP, so numerators and denominators grow without bound.
/// Equality is structural on the canonical form.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : q_(mpz_class(static_cast<long>(value))) {}  // NOLINT(implicit)

  explicit Rational(const mpz_class& value) : q_(value) {}

  /// Throws Error(ZeroDenominator) when den == 0.
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "p" or "p/q" with optional leading '-' on p. Whitespace is not
  /// allowed. Throws Error(ParseError) or Error(ZeroDenominator).
  static Rational parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational abs() const;
  mpz_class floor() const;
  mpz_class ceil() const;
  double to_double() const { return q_.get_d(); }

  /// "p" for integers, otherwise "p/q".
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Largest-ish rational s with 0 <= s <= sqrt(r). Exact whenever r is the
/// square of a rational; otherwise s is within a relative error of
/// 2^-bits below the true root. Requires r >= 0.
Rational sqrt_lower(const Rational& r, unsigned bits = 16);

/// Exact dyadic rational nearest to v at resolution 2^-scale_bits.
Rational from_double(double v, int scale_bits);

/// 2^e for any integer e.
Rational pow2(int e);

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace pltopo
