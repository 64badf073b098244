#include "rlfrac/gamma.hpp"

#include <cmath>
#include <limits>

namespace rlfrac {

bool is_gamma_pole(double x) { return x <= 0.0 && x == std::floor(x); }

double reciprocal_gamma(double x) {
  if (is_gamma_pole(x)) return 0.0;
  // Gamma overflows double near 171.6; the reciprocal stays representable (subnormal) a little longer.
  if (x > 170.0) return std::exp(-std::lgamma(x));
  return 1.0 / std::tgamma(x);
}

long double reciprocal_gamma(long double x) {
  if (x <= 0.0L && x == std::floor(x)) return 0.0L;
  if (x > 1700.0L) return std::exp(-std::lgamma(x));
  return 1.0L / std::tgamma(x);
}

}  // namespace rlfrac
