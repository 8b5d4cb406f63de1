#include "toyfriend/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace toyfriend {

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational denominator must be nonzero");
  }
  value_.canonicalize();
}

Rational Rational::operator/(const Rational& other) const {
  if (other.is_zero()) {
    throw std::domain_error("division of Rational by zero");
  }
  return Rational(mpq_class(value_ / other.value_));
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  int c = cmp(value_, other.value_);
  if (c < 0) {
    return std::strong_ordering::less;
  }
  if (c > 0) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::int64_t Rational::numerator_i64() const {
  const mpz_class& num = value_.get_num();
  if (!num.fits_slong_p()) {
    throw std::overflow_error("Rational numerator does not fit in 64 bits: " + num.get_str());
  }
  return num.get_si();
}

std::int64_t Rational::denominator_i64() const {
  const mpz_class& den = value_.get_den();
  if (!den.fits_slong_p()) {
    throw std::overflow_error("Rational denominator does not fit in 64 bits: " + den.get_str());
  }
  return den.get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace toyfriend
