#include "rlfrac/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rlfrac/error.hpp"
#include "rlfrac/gamma.hpp"

namespace rlfrac {

namespace {

using WideFloat = boost::multiprecision::cpp_bin_float_50;

constexpr double kPi = std::numbers::pi;

// Cancellation the extended series can absorb: exp(60) ~ 1e26 of the 50 digits.
constexpr double kExtendedRootLimit = 60.0;

// Smallest |z|^(1/alpha) at which the expansion is tried below the switch radius.
constexpr double kAsymptoticTryRoot = 12.0;

// log|1/Gamma(x)|, with -inf at the poles.
double log_abs_reciprocal_gamma(double x) {
  if (is_gamma_pole(x)) return -std::numeric_limits<double>::infinity();
  return -std::lgamma(x);
}

[[noreturn]] void throw_divergence(Complex z, const MLParams& p, std::string_view why) {
  std::ostringstream os;
  os << why << " (|z|=" << std::abs(z) << ", alpha=" << p.alpha << ", beta=" << p.beta << ")";
  throw Error(ErrorCode::ml_divergence, os.str());
}

template <class Real>
struct SeriesSum {
  Real re{0};
  Real im{0};
  Real abs_sum{0};   // sum of |terms|, drives the rounding estimate
  Real truncation{0};
  int terms = 0;
  bool converged = false;
};

// Sums c_k z^k with manual complex arithmetic so that the same code serves
// long double and the multiprecision type. Stops once the term ratio bound is
// below 1/2 and the current term is two orders below the absolute budget.
template <class Real>
SeriesSum<Real> sum_power_series(const std::vector<Real>& coeff, Real zr, Real zi, double tol) {
  using std::abs;
  using std::sqrt;
  SeriesSum<Real> out;
  Real pr{1};
  Real pi{0};
  const Real zabs = sqrt(zr * zr + zi * zi);
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    const Real tr = pr * coeff[k];
    const Real ti = pi * coeff[k];
    out.re += tr;
    out.im += ti;
    const Real tabs = sqrt(tr * tr + ti * ti);
    out.abs_sum += tabs;
    out.terms = static_cast<int>(k) + 1;

    if (k + 1 < coeff.size() && coeff[k] != Real{0}) {
      const Real ratio = zabs * abs(coeff[k + 1]) / abs(coeff[k]);
      const Real sum_abs = sqrt(out.re * out.re + out.im * out.im);
      const Real budget = Real{tol} * (sum_abs > Real{1} ? sum_abs : Real{1});
      if (ratio < Real{0.5} && tabs <= Real{0.01} * budget) {
        out.truncation = tabs;
        out.converged = true;
        return out;
      }
    }
    const Real nr = pr * zr - pi * zi;
    pi = pr * zi + pi * zr;
    pr = nr;
  }
  return out;
}

}  // namespace

struct MittagLeffler::Tables {
  std::vector<long double> narrow;
  std::once_flag wide_once;
  std::vector<WideFloat> wide;
  double alpha = 1.0;
  double beta = 1.0;

  const std::vector<WideFloat>& wide_table() {
    std::call_once(wide_once, [this] {
      wide.resize(narrow.size());
      const WideFloat a{alpha};
      const WideFloat b{beta};
      for (std::size_t k = 0; k < wide.size(); ++k) {
        const WideFloat x = a * static_cast<unsigned>(k) + b;
        if (x <= 0 && x == floor(x)) {
          wide[k] = 0;
        } else {
          wide[k] = 1 / boost::math::tgamma(x);
        }
      }
    });
    return wide;
  }
};

std::string_view to_string(MLBranch branch) {
  switch (branch) {
    case MLBranch::series: return "series";
    case MLBranch::series_extended: return "series-extended";
    case MLBranch::asymptotic: return "asymptotic";
  }
  return "unknown";
}

double MittagLeffler::default_switch_radius(double alpha, double tol) {
  return std::pow(std::log(1.0 / tol) + 10.0, alpha);
}

MittagLeffler::MittagLeffler(MLParams params, double tol, std::optional<double> switch_radius)
    : params_(params), tol_(tol) {
  if (!(params.alpha > 0.0) || !std::isfinite(params.alpha)) {
    throw Error(ErrorCode::invalid_argument, "Mittag-Leffler alpha must be positive and finite");
  }
  if (!std::isfinite(params.beta)) {
    throw Error(ErrorCode::invalid_argument, "Mittag-Leffler beta must be finite");
  }
  if (!(tol > 1e-15 && tol < 1e-2)) {
    throw Error(ErrorCode::invalid_argument, "Mittag-Leffler tolerance must lie in (1e-15, 1e-2)");
  }
  switch_radius_ = switch_radius.value_or(default_switch_radius(params.alpha, tol));
  if (!(switch_radius_ > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "switch radius must be positive");
  }

  // Table long enough for the series to converge to ~1e-60 relative to its
  // largest term anywhere the series may be used.
  const double radius = std::max(1.25 * switch_radius_,
                                 std::pow(kExtendedRootLimit, params.alpha));
  const double log_r = std::log(radius);
  double log_peak = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < 20000; ++k) {
    const double lt = static_cast<double>(k) * log_r +
                      log_abs_reciprocal_gamma(params.alpha * static_cast<double>(k) + params.beta);
    log_peak = std::max(log_peak, lt);
    count = k + 1;
    if (k >= 16 && lt < log_peak - 140.0) break;
  }

  tables_ = std::make_shared<Tables>();
  tables_->alpha = params.alpha;
  tables_->beta = params.beta;
  tables_->narrow.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    const long double x = static_cast<long double>(params.alpha) * static_cast<long double>(k) +
                          static_cast<long double>(params.beta);
    tables_->narrow[k] = reciprocal_gamma(x);
  }
}

long double MittagLeffler::coefficient(std::size_t k) const {
  return k < tables_->narrow.size() ? tables_->narrow[k] : 0.0L;
}

std::size_t MittagLeffler::coefficient_count() const { return tables_->narrow.size(); }

MLEvaluation MittagLeffler::evaluate(Complex z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::invalid_argument, "Mittag-Leffler argument must be finite");
  }
  const double r = std::abs(z);
  if (params_.alpha > 2.0) return series(z);
  if (r <= switch_radius_) {
    // Below the switch radius the expansion is still accepted whenever its own
    // bound meets the tolerance; this spares the extended-precision series.
    if (std::pow(r, 1.0 / params_.alpha) >= kAsymptoticTryRoot) {
      MLEvaluation asym = asymptotic(z);
      if (asym.error_estimate <= 0.5 * tol_ * std::max(1.0, std::abs(asym.value))) return asym;
    }
    return series(z);
  }

  MLEvaluation asym = asymptotic(z);
  if (asym.error_estimate <= tol_ * std::max(1.0, std::abs(asym.value))) return asym;
  if (std::pow(r, 1.0 / params_.alpha) <= kExtendedRootLimit) return series_extended(z);
  throw_divergence(z, params_, "asymptotic expansion misses tolerance beyond series range");
}

MLEvaluation MittagLeffler::series(Complex z) const {
  if (z == Complex{0.0, 0.0}) {
    return {Complex{static_cast<double>(tables_->narrow[0]), 0.0}, 0.0, MLBranch::series, 1};
  }
  const auto sum = sum_power_series<long double>(tables_->narrow, z.real(), z.imag(), tol_);
  const Complex value{static_cast<double>(sum.re), static_cast<double>(sum.im)};
  const double rounding =
      8.0 * static_cast<double>(std::numeric_limits<long double>::epsilon() * sum.abs_sum);
  const double error = static_cast<double>(sum.truncation) + rounding;
  if (sum.converged && error <= 0.5 * tol_ * std::max(1.0, std::abs(value))) {
    return {value, error, MLBranch::series, sum.terms};
  }
  return series_extended(z);
}

MLEvaluation MittagLeffler::series_extended(Complex z) const {
  const auto& wide = tables_->wide_table();
  const auto sum = sum_power_series<WideFloat>(wide, WideFloat{z.real()}, WideFloat{z.imag()}, tol_);
  if (!sum.converged) throw_divergence(z, params_, "series did not converge within the term budget");
  const Complex value{static_cast<double>(sum.re), static_cast<double>(sum.im)};
  const double rounding = static_cast<double>(sum.abs_sum * WideFloat{1e-48});
  const double error = static_cast<double>(sum.truncation) + rounding;
  if (error > tol_ * std::max(1.0, std::abs(value))) {
    throw_divergence(z, params_, "cancellation exceeds extended precision");
  }
  return {value, error, MLBranch::series_extended, sum.terms};
}

MLEvaluation MittagLeffler::asymptotic(Complex z) const {
  const double alpha = params_.alpha;
  const double beta = params_.beta;
  const double r = std::abs(z);
  if (r == 0.0) throw_divergence(z, params_, "asymptotic expansion undefined at z = 0");
  if (alpha > 2.0) throw_divergence(z, params_, "asymptotic expansion implemented for alpha <= 2 only");

  const double theta = std::arg(z);
  const double root = std::pow(r, 1.0 / alpha);
  const double log_r = std::log(r);

  // Residues at the roots of Z^alpha = z on the principal sheet.
  Complex exponential{0.0, 0.0};
  const int kmin = static_cast<int>(std::ceil((-alpha * kPi - theta) / (2.0 * kPi)));
  const int kmax = static_cast<int>(std::floor((alpha * kPi - theta) / (2.0 * kPi)));
  for (int k = kmin; k <= kmax; ++k) {
    const double angle = theta + 2.0 * kPi * k;
    if (std::abs(angle) >= alpha * kPi) continue;
    const double phi = angle / alpha;
    const Complex exponent{(1.0 - beta) / alpha * log_r + root * std::cos(phi),
                           (1.0 - beta) * phi + root * std::sin(phi)};
    exponential += std::exp(exponent) / alpha;
  }

  // Algebraic tail, truncated where the envelope |z|^-j Gamma(1 - beta + alpha j) / pi
  // of its terms is smallest. 1/Gamma(beta - alpha j) oscillates, so the raw
  // term sizes would stop the sum too early.
  const auto envelope = [&](int j, double c) {
    const double x = beta - alpha * j;
    if (1.0 - x > 0.0) return std::exp(-j * log_r + std::lgamma(1.0 - x)) / kPi;
    return std::abs(c) * std::exp(-j * log_r);
  };
  Complex algebraic{0.0, 0.0};
  const Complex zinv = 1.0 / z;
  Complex power = zinv;
  double previous = std::numeric_limits<double>::infinity();
  double omitted = 0.0;
  int terms = 0;
  const double scale = std::max(1.0, std::abs(exponential));
  for (int j = 1; j <= 400; ++j, power *= zinv) {
    const double c = reciprocal_gamma(beta - alpha * j);
    const double env = envelope(j, c);
    omitted = env;
    if (env > previous) break;
    algebraic -= power * c;
    previous = env;
    terms = j;
    if (env < 1e-3 * tol_ * scale) break;
  }

  // Roots sitting on the cut contribute at most exp(-root) in magnitude.
  const double stokes = std::exp(-root + (1.0 - beta) / alpha * log_r) / alpha;
  const Complex value = exponential + algebraic;
  const double rounding = 16.0 * std::numeric_limits<double>::epsilon() *
                          (std::abs(exponential) + std::abs(algebraic));
  return {value, omitted + stokes + rounding, MLBranch::asymptotic, terms};
}

Complex ml_scalar(MLParams params, Complex z, double tol) {
  return MittagLeffler(params, tol)(z);
}

}  // namespace rlfrac
