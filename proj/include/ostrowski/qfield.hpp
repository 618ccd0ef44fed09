#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ostrowski/error.hpp"

namespace ostrowski {

using Integer = mpz_class;

// Exact element (p + q*sqrt(d)) / r of a real quadratic field.
//
// Canonical form: r >= 1, gcd(p, q, r) = 1 and d square-free.  A value with
// q = 0 is rational; it keeps whatever radicand it was produced with (1 when
// it never met one) and that radicand is ignored by comparisons, so rationals
// combine freely with any field.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long n) : p_(n) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(const Integer& n) : p_(n) {}  // NOLINT(google-explicit-constructor)

  // Builds (p + q*sqrt(radicand)) / r.  Square factors are pulled out of the
  // radicand (sqrt(8) becomes 2*sqrt(2)) and perfect squares collapse to a
  // rational value.
  QuadraticNumber(Integer p, Integer q, Integer r, Integer radicand);

  static QuadraticNumber rational(const Integer& num, const Integer& den);
  static QuadraticNumber sqrt(const Integer& radicand);

  // Parses the "(p+q*sqrt(d))/r" literal family; see to_string().
  static QuadraticNumber parse(std::string_view text);

  const Integer& p() const noexcept { return p_; }
  const Integer& q() const noexcept { return q_; }
  const Integer& r() const noexcept { return r_; }
  const Integer& d() const noexcept { return d_; }

  bool is_rational() const noexcept { return q_ == 0; }
  bool is_integer() const noexcept { return q_ == 0 && r_ == 1; }
  bool is_zero() const noexcept { return q_ == 0 && p_ == 0; }

  // Exact sign of the value using integer arithmetic only.
  int sign() const;

  // Greatest integer <= value.
  Integer floor() const;

  // Throws NotAnInteger unless the value is an integer.
  Integer to_integer() const;

  QuadraticNumber conjugate() const;
  QuadraticNumber abs() const { return sign() < 0 ? -*this : *this; }
  QuadraticNumber inverse() const;

  // Rounded approximation for display only; never used for decisions.
  double approx() const;

  std::string to_string() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& rhs);
  QuadraticNumber& operator-=(const QuadraticNumber& rhs);
  QuadraticNumber& operator*=(const QuadraticNumber& rhs);
  QuadraticNumber& operator/=(const QuadraticNumber& rhs);

  friend QuadraticNumber operator+(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs += rhs; }
  friend QuadraticNumber operator-(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs -= rhs; }
  friend QuadraticNumber operator*(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs *= rhs; }
  friend QuadraticNumber operator/(QuadraticNumber lhs, const QuadraticNumber& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadraticNumber& lhs, const QuadraticNumber& rhs);
  friend std::strong_ordering operator<=>(const QuadraticNumber& lhs, const QuadraticNumber& rhs);

  std::size_t hash() const;

 private:
  void canonicalize();
  QuadraticNumber& add_scaled(const QuadraticNumber& rhs, int sign);
  static const Integer& common_radicand(const QuadraticNumber& x, const QuadraticNumber& y);

  Integer p_{0};
  Integer q_{0};
  Integer r_{1};
  Integer d_{1};
};

// Sign of x - y.
inline int compare(const QuadraticNumber& x, const QuadraticNumber& y) { return (x - y).sign(); }

struct QuadraticNumberHash {
  std::size_t operator()(const QuadraticNumber& x) const { return x.hash(); }
};

// Splits n > 0 as k^2 * m with m square-free and returns m (k goes to the out
// parameter).  Square factors are found by trial division up to 10^6 plus a
// perfect-square test of the cofactor.
Integer square_free_part(const Integer& n, Integer* square_root_of_rest = nullptr);

}  // namespace ostrowski
