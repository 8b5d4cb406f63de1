#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace toyfriend {

// Exact rational number. Always stored in lowest terms with a positive
// denominator, so two equal values are structurally identical. No floating
// point is involved in any arithmetic path.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long value) : value_(value) {}
  Rational(long numerator, long denominator);

  Rational operator+(const Rational& other) const { return Rational(value_ + other.value_); }
  Rational operator-(const Rational& other) const { return Rational(value_ - other.value_); }
  Rational operator*(const Rational& other) const { return Rational(value_ * other.value_); }
  Rational operator/(const Rational& other) const;
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& other) { value_ += other.value_; return *this; }
  Rational& operator-=(const Rational& other) { value_ -= other.value_; return *this; }
  Rational& operator*=(const Rational& other) { value_ *= other.value_; return *this; }
  Rational& operator/=(const Rational& other) { *this = *this / other; return *this; }

  bool operator==(const Rational& other) const { return value_ == other.value_; }
  std::strong_ordering operator<=>(const Rational& other) const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_negative() const { return sgn(value_) < 0; }

  // "3/4", "-1/2", or "1" when the denominator is one.
  std::string str() const;
  std::string numerator_str() const { return value_.get_num().get_str(); }
  std::string denominator_str() const { return value_.get_den().get_str(); }

  // Throw std::overflow_error when the component does not fit.
  std::int64_t numerator_i64() const;
  std::int64_t denominator_i64() const;

  double to_double() const { return value_.get_d(); }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace toyfriend
