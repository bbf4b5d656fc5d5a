#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fairdiv {

/// Exact arbitrary-precision rational number, always kept in lowest terms
/// with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class. It exists so that the rest of
/// the library never sees gmpxx expression templates (which do not mix well
/// with `auto`) and so that parsing and printing follow one canonical form.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(mpq_class value);

  /// Parses "p/q", "p", or a finite decimal such as "-0.125". Decimals are
  /// converted through powers of ten, never through binary floating point.
  /// Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  /// Canonical lowest-terms rendering: "p/q", or "p" when q == 1.
  [[nodiscard]] std::string str() const;
  /// Decimal rendering rounded half away from zero to `digits` places.
  [[nodiscard]] std::string decimal(int digits) const;
  [[nodiscard]] double to_double() const;

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] std::string numerator() const;
  [[nodiscard]] std::string denominator() const;

  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

/// max(value, 0).
[[nodiscard]] Rational positive_part(const Rational& value);
[[nodiscard]] const Rational& min(const Rational& a, const Rational& b);
[[nodiscard]] const Rational& max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace fairdiv
