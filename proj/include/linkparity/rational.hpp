#ifndef LINKPARITY_RATIONAL_HPP
#define LINKPARITY_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace linkparity {

using Integer = mpz_class;

/// Exact rational number backed by GMP.
///
/// Always stored in canonical form: the denominator is positive and coprime
/// to the numerator. Equality is therefore structural. Text form is "p/q"
/// with an optional sign, or "p" when the denominator is 1.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  explicit Rational(const Integer& value) : value_(value) {}
  Rational(const Integer& numerator, const Integer& denominator);

  static Rational parse(std::string_view text);
  std::string str() const { return value_.get_str(); }

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& q) {
    Rational r;
    r.value_ = -q.value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& gmp() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);
Rational pow(const Rational& base, unsigned exponent);

/// Least positive integer m such that m * q is an integer for every q in the
/// range.
template <typename Range>
Integer common_denominator(const Range& values) {
  Integer m = 1;
  for (const Rational& q : values) {
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), q.denominator().get_mpz_t());
  }
  return m;
}

}  // namespace linkparity

namespace Eigen {

template <>
struct NumTraits<linkparity::Rational> : GenericNumTraits<linkparity::Rational> {
  using Real = linkparity::Rational;
  using NonInteger = linkparity::Rational;
  using Literal = linkparity::Rational;
  using Nested = linkparity::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // LINKPARITY_RATIONAL_HPP
