#pragma once

#include "simplex_lab/errors.hpp"
#include "simplex_lab/laurent.hpp"
#include "simplex_lab/quad_ext.hpp"
#include "simplex_lab/rational.hpp"

#include <cmath>
#include <complex>
#include <string_view>

namespace simplex_lab {

using Complex = std::complex<double>;

/// Absolute tolerance for zero/equality tests on complex scalars.
inline constexpr double kComplexTolerance = 1e-10;

/// Uniform access to the scalar rings. `like` supplies context that the
/// type alone does not fix (the discriminant of a QuadExt).
template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";
  static Rational embed(const Rational& r, const Rational& = {}) { return r; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool equal(const Rational& x, const Rational& y) { return x == y; }
};

template <>
struct RingTraits<QuadExt> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "quadext";
  static QuadExt embed(const Rational& r, const QuadExt& like = {}) { return QuadExt::embed(r, like.d()); }
  static bool is_zero(const QuadExt& x) { return x.is_zero(); }
  static bool equal(const QuadExt& x, const QuadExt& y) { return x == y; }
};

template <>
struct RingTraits<LaurentPoly> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "laurent";
  static LaurentPoly embed(const Rational& r, const LaurentPoly& = {}) { return LaurentPoly(r); }
  static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
  static bool equal(const LaurentPoly& x, const LaurentPoly& y) { return x == y; }
};

template <>
struct RingTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "complex";
  static Complex embed(const Rational& r, const Complex& = {}) { return {r.to_double(), 0.0}; }
  static bool is_zero(const Complex& x, double tol = kComplexTolerance) { return std::abs(x) <= tol; }
  static bool equal(const Complex& x, const Complex& y, double tol = kComplexTolerance) {
    return std::abs(x - y) <= tol;
  }
};

template <class T>
concept Scalar = requires(const T& x, const T& y, const Rational& r) {
  { x + y } -> std::convertible_to<T>;
  { x - y } -> std::convertible_to<T>;
  { x * y } -> std::convertible_to<T>;
  { -x } -> std::convertible_to<T>;
  { RingTraits<T>::embed(r, x) } -> std::convertible_to<T>;
  { RingTraits<T>::is_zero(x) } -> std::convertible_to<bool>;
};

template <class T>
concept ExactScalar = Scalar<T> && RingTraits<T>::exact;

/// Exact division for exact rings; IEEE division for Complex with an
/// explicit error on an exactly-zero divisor.
template <Scalar T>
T ring_div(const T& x, const T& y) {
  if constexpr (std::is_same_v<T, Complex>) {
    if (y == Complex(0.0, 0.0)) throw RingError("complex division by zero");
    return x / y;
  } else {
    return x / y;
  }
}

template <Scalar T>
T scale(const T& x, const Rational& r) {
  return x * RingTraits<T>::embed(r, x);
}

}  // namespace simplex_lab
