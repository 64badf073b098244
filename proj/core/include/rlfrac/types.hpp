#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace rlfrac {

using Complex = std::complex<double>;

// Operator values are complex so that generators with non-real spectra
// (rotations, damped oscillators) share one code path with real ones.
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Regular part G of a family written as T(t) = t^p G(t).
using RegularFn = std::function<Matrix(double)>;

}  // namespace rlfrac
