#include "simplex_lab/quad_ext.hpp"

#include "simplex_lab/errors.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace simplex_lab {

bool is_valid_discriminant(long d) {
  if (d == 0 || d == 1) return false;
  unsigned long m = d < 0 ? static_cast<unsigned long>(-d) : static_cast<unsigned long>(d);
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    while (m % p == 0) m /= p;
  }
  return true;
}

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!is_valid_discriminant(d))
    throw RingError("quadratic extension discriminant must be squarefree and not 0 or 1, got " + std::to_string(d));
}

void QuadExt::check_same_field(const QuadExt& o) const {
  if (d_ != o.d_)
    throw RingError("mixed quadratic extensions: d=" + std::to_string(d_) + " vs d=" + std::to_string(o.d_));
}

Rational QuadExt::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

std::string QuadExt::to_string() const {
  return a_.to_string() + " + " + b_.to_string() + "*sqrt(" + std::to_string(d_) + ")";
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  check_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  check_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  check_same_field(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d_);
  Rational b = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  check_same_field(o);
  if (o.is_zero()) throw RingError("quadratic extension division by zero");
  // d is not a rational square, so the norm of a nonzero element is nonzero.
  const Rational nrm = o.norm();
  *this *= o.conjugate();
  a_ /= nrm;
  b_ /= nrm;
  return *this;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  x.check_same_field(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

}  // namespace simplex_lab
