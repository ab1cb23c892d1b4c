#pragma once

#include "simplex_lab/rational.hpp"

#include <iosfwd>
#include <string>

namespace simplex_lab {

/// Element a + b*sqrt(d) of Q(sqrt(d)) for a squarefree integer d != 0, 1.
///
/// Every element carries its discriminant; combining elements with different
/// discriminants throws RingError. Catalog points use d = -15, since
/// sqrt(-3/5) = (1/5) sqrt(-15).
class QuadExt {
public:
  /// Canonical discriminant for the five-cycle catalog points.
  static constexpr long kCatalogDiscriminant = -15;

  QuadExt() = default;
  QuadExt(Rational a, Rational b, long d);
  /// Rational element of Q(sqrt(d)).
  static QuadExt embed(const Rational& a, long d) { return QuadExt(a, Rational(0), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }
  /// Field norm a^2 - d b^2.
  Rational norm() const;

  std::string to_string() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  /// Componentwise; throws RingError on mismatched discriminants.
  friend bool operator==(const QuadExt& x, const QuadExt& y);

private:
  void check_same_field(const QuadExt& o) const;

  Rational a_{0};
  Rational b_{0};
  long d_{kCatalogDiscriminant};
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

/// True if |d| has no repeated prime factor and d not in {0, 1}.
bool is_valid_discriminant(long d);

}  // namespace simplex_lab
