#pragma once

namespace rlfrac {

/// 1/Gamma(x), continued by zero at the poles x = 0, -1, -2, ...
/// Total on finite x; relative error below 1e-13 for |x| <= 50.
double reciprocal_gamma(double x);

/// Extended-precision variant used for series coefficient tables.
long double reciprocal_gamma(long double x);

/// True when x is a non-positive integer (a pole of Gamma).
bool is_gamma_pole(double x);

}  // namespace rlfrac
