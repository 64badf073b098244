#include "rlfrac/generator.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "rlfrac/error.hpp"

namespace rlfrac {

namespace {

using WideComplex = std::complex<long double>;
using WideMatrix = Eigen::Matrix<WideComplex, Eigen::Dynamic, Eigen::Dynamic>;

double condition_number(const Matrix& v) {
  Eigen::JacobiSVD<Matrix> svd(v);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 1.0;
  const double smallest = s(s.size() - 1);
  if (!(smallest > 0.0)) return std::numeric_limits<double>::infinity();
  return s(0) / smallest;
}

}  // namespace

Generator::Generator(Matrix entries, Spectral spectral) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0) {
    throw Error(ErrorCode::invalid_argument, "generator must be a non-empty square matrix");
  }
  if (!entries_.allFinite()) {
    throw Error(ErrorCode::invalid_argument, "generator entries must be finite");
  }
  norm_ = entries_.norm();

  Eigen::ComplexEigenSolver<Matrix> solver(entries_, spectral == Spectral::compute);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::invalid_argument, "eigenvalue computation failed for generator");
  }
  spectral_radius_ = solver.eigenvalues().cwiseAbs().maxCoeff();
  if (spectral == Spectral::skip) return;

  SpectralCache cache;
  cache.eigenvalues = solver.eigenvalues();
  cache.vectors = solver.eigenvectors();
  cache.condition = condition_number(cache.vectors);
  if (!std::isfinite(cache.condition)) return;
  cache.inverse = cache.vectors.inverse();
  const Matrix rebuilt = cache.vectors * cache.eigenvalues.asDiagonal() * cache.inverse;
  if ((rebuilt - entries_).norm() > 1e-10 * std::max(norm_, std::numeric_limits<double>::min())) {
    return;
  }
  spectral_ = std::move(cache);
}

Generator Generator::real(const Eigen::MatrixXd& entries, Spectral spectral) {
  return Generator(entries.cast<Complex>(), spectral);
}

Generator Generator::zero(Eigen::Index dim) { return Generator(Matrix::Zero(dim, dim)); }

Matrix ml_matrix_series(const MittagLeffler& kernel, const Matrix& argument) {
  const double tol = kernel.tolerance();
  const Eigen::Index n = argument.rows();
  const WideMatrix z = argument.cast<WideComplex>();
  const long double znorm = z.norm();

  WideMatrix power = WideMatrix::Identity(n, n);
  WideMatrix sum = WideMatrix::Zero(n, n);
  long double abs_sum = 0.0L;
  const std::size_t count = kernel.coefficient_count();
  for (std::size_t k = 0; k < count; ++k) {
    const long double c = kernel.coefficient(k);
    const WideMatrix term = power * WideComplex(c, 0.0L);
    sum += term;
    const long double tnorm = term.norm();
    abs_sum += tnorm;

    if (k + 1 < count && c != 0.0L) {
      // ||z^(k+1)|| <= ||z|| ||z^k|| bounds the ratio of consecutive terms.
      const long double ratio = znorm * std::abs(kernel.coefficient(k + 1)) / std::abs(c);
      const long double budget = static_cast<long double>(tol) * (1.0L + sum.norm());
      // power may underflow to zero for nilpotent arguments; that is convergence too.
      const bool vanished = power.norm() == 0.0L;
      if (vanished || (ratio < 0.5L && tnorm <= 0.01L * budget)) {
        const long double rounding =
            8.0L * std::numeric_limits<long double>::epsilon() * abs_sum * static_cast<long double>(n);
        if (rounding > budget) break;
        return sum.cast<Complex>();
      }
    }
    power = power * z;
  }
  std::ostringstream os;
  os << "matrix series for E_{" << kernel.params().alpha << "," << kernel.params().beta
     << "} did not reach tolerance (||z||=" << static_cast<double>(znorm) << ")";
  throw Error(ErrorCode::ml_matrix_failure, os.str());
}

Matrix ml_matrix(const MittagLeffler& kernel, const Generator& gen, Complex scale) {
  if (scale == Complex{0.0, 0.0} || gen.norm() == 0.0) {
    return kernel(Complex{0.0, 0.0}) * Matrix::Identity(gen.dim(), gen.dim());
  }
  const auto& spectral = gen.spectral();
  if (spectral && spectral->condition <= kSpectralConditionLimit) {
    Vector values(spectral->eigenvalues.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      values(i) = kernel(scale * spectral->eigenvalues(i));
    }
    return spectral->vectors * values.asDiagonal() * spectral->inverse;
  }
  return ml_matrix_series(kernel, scale * gen.entries());
}

Matrix ml_matrix(MLParams params, const Generator& gen, double tol) {
  return ml_matrix(MittagLeffler(params, tol), gen);
}

}  // namespace rlfrac
