#include "simplex_lab/laurent.hpp"

#include "simplex_lab/errors.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace simplex_lab {

int Degree::value() const {
  if (!value_) throw PreconditionError("degree of the zero polynomial is minus infinity");
  return *value_;
}

std::string Degree::to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms)
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace(exponent, c);
  return p;
}

Degree LaurentPoly::top_degree() const {
  return terms_.empty() ? Degree::minus_infinity() : Degree::of(terms_.rbegin()->first);
}

Degree LaurentPoly::low_degree() const {
  return terms_.empty() ? Degree::minus_infinity() : Degree::of(terms_.begin()->first);
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    const bool unit = mag == Rational(1);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) out.add_term(ex + ey, cx * cy);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator/=(const LaurentPoly& o) {
  if (o.is_zero()) throw RingError("Laurent division by zero");
  if (is_zero()) return *this;
  const int divisor_top = o.terms_.rbegin()->first;
  const Rational& divisor_lead = o.terms_.rbegin()->second;
  // An exact quotient has no exponent below this floor.
  const int floor = terms_.begin()->first - o.terms_.begin()->first;
  LaurentPoly remainder = *this;
  LaurentPoly quotient;
  while (!remainder.is_zero()) {
    const auto& [top, lead] = *remainder.terms_.rbegin();
    const int e = top - divisor_top;
    if (e < floor) throw RingError("inexact Laurent division: " + to_string() + " / " + o.to_string());
    const LaurentPoly step = monomial(lead / divisor_lead, e);
    quotient += step;
    remainder -= step * o;
  }
  *this = std::move(quotient);
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(Rational(1));
  LaurentPoly base = *this;
  while (exponent) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace simplex_lab
