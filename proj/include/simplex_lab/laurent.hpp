#pragma once

#include "simplex_lab/rational.hpp"

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace simplex_lab {

/// Degree of a Laurent polynomial: an integer, or minus infinity for zero.
class Degree {
public:
  static Degree minus_infinity() { return Degree(); }
  static Degree of(int d) { return Degree(d); }

  bool is_minus_infinity() const { return !value_.has_value(); }
  /// Throws PreconditionError for minus infinity.
  int value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& x, const Degree& y) {
    if (x.is_minus_infinity() || y.is_minus_infinity())
      return static_cast<int>(!x.is_minus_infinity()) <=> static_cast<int>(!y.is_minus_infinity());
    return *x.value_ <=> *y.value_;
  }
  friend bool operator<=(const Degree& x, int d) { return x <= Degree(d); }
  friend bool operator>(const Degree& x, int d) { return x > Degree(d); }

  std::string to_string() const;

private:
  Degree() = default;
  explicit Degree(int d) : value_(d) {}
  std::optional<int> value_;
};

/// Sparse Laurent polynomial in one variable t with rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  explicit LaurentPoly(Terms terms);

  /// c * t^exponent
  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly t() { return monomial(Rational(1), 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Degree top_degree() const;
  Degree low_degree() const;
  /// Coefficient of t^exponent (zero when absent).
  Rational coefficient(int exponent) const;
  /// Coefficient at top_degree(); zero for the zero polynomial.
  Rational leading_coefficient() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Human-readable, descending exponents, e.g. "4*t^2 - 4*t^-2 + t^-6".
  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// Exact division; throws RingError on a zero divisor or a nonzero remainder.
  LaurentPoly& operator/=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator/(LaurentPoly x, const LaurentPoly& y) { return x /= y; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned exponent) const;

private:
  void add_term(int exponent, const Rational& c);
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace simplex_lab
