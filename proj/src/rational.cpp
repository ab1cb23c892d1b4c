#include "simplex_lab/rational.hpp"

#include "simplex_lab/errors.hpp"

#include <ostream>
#include <regex>
#include <utility>

namespace simplex_lab {

Rational::Rational(long num, long den) {
  if (den == 0) throw RingError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw RingError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  static const std::regex kPattern(R"(\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, kPattern)) throw ParseError("not a rational: \"" + s + "\"");
  mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str(), 10);
  mpz_class den(1);
  if (m[2].matched) den = mpz_class(m[2].str(), 10);
  if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw RingError("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw RingError("zero to a negative power");
    return (Rational(1) / *this).pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace simplex_lab
