#include "simplex_lab/metrics.hpp"

namespace simplex_lab {

Rational cayley_menger_denominator(int n) {
  Rational d(1);
  for (int k = 2; k <= n; ++k) d *= Rational(k) * Rational(k);
  return d * Rational(2).pow(n);
}

}  // namespace simplex_lab
