#include "rlfrac/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rlfrac/error.hpp"
#include "rlfrac/frac_calc.hpp"
#include "rlfrac/gamma.hpp"

namespace rlfrac {

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw Error(ErrorCode::invalid_argument,
                "fractional order must lie strictly in (1, 2), got " + std::to_string(alpha));
  }
}

std::string_view to_string(FamilyKind kind) {
  return kind == FamilyKind::caputo ? "caputo" : "rl";
}

FamilyKind parse_family_kind(std::string_view text) {
  if (text == "rl" || text == "riemann_liouville") return FamilyKind::riemann_liouville;
  if (text == "caputo") return FamilyKind::caputo;
  throw Error(ErrorCode::invalid_argument, "unknown family kind '" + std::string(text) + "'");
}

namespace {

MLParams main_params(const FracOrder& order, FamilyKind kind) {
  return {order.alpha(), kind == FamilyKind::caputo ? 1.0 : order.alpha_m1()};
}

MLParams image_params(const FracOrder& order, FamilyKind kind) {
  return {order.alpha(),
          kind == FamilyKind::caputo ? order.alpha() + 1.0 : 2.0 * order.alpha() - 1.0};
}

}  // namespace

RLFamily::RLFamily(FracOrder order, std::shared_ptr<const Generator> gen, FamilyKind kind, double tol)
    : order_(order),
      gen_(std::move(gen)),
      kind_(kind),
      tol_(tol),
      main_(main_params(order, kind), tol),
      image_(image_params(order, kind), tol) {
  if (!gen_) throw Error(ErrorCode::invalid_argument, "family needs a generator");
}

double RLFamily::exponent() const noexcept {
  return kind_ == FamilyKind::caputo ? 0.0 : order_.alpha_m2();
}

Matrix RLFamily::g0() const { return regular(0.0); }

Matrix RLFamily::regular(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::out_of_range, "family regular part needs t >= 0");
  }
  return ml_matrix(main_, *gen_, std::pow(t, order_.alpha()));
}

Matrix RLFamily::operator()(double t) const {
  if (!(t > 0.0)) throw Error(ErrorCode::out_of_range, "family is defined for t > 0 only");
  return std::pow(t, exponent()) * regular(t);
}

Matrix RLFamily::jalpha(double t) const {
  if (!(t > 0.0)) throw Error(ErrorCode::out_of_range, "family is defined for t > 0 only");
  const double power = kind_ == FamilyKind::caputo ? order_.alpha() : order_.two_alpha_m2();
  return std::pow(t, power) * ml_matrix(image_, *gen_, std::pow(t, order_.alpha()));
}

Matrix RLFamily::laplace(double lambda) const {
  if (!(lambda > 0.0)) throw Error(ErrorCode::invalid_argument, "Laplace variable must be positive");
  const Eigen::Index n = gen_->dim();
  const double la = std::pow(lambda, order_.alpha());
  const Matrix shifted = la * Matrix::Identity(n, n) - gen_->entries();
  const double prefactor = kind_ == FamilyKind::caputo ? la / lambda : lambda;
  return prefactor * shifted.partialPivLu().inverse();
}

double RLFamily::growth_bound() const {
  return std::pow(gen_->spectral_radius(), 1.0 / order_.alpha());
}

RLFamily build_family(const FracOrder& order, const Generator& gen, FamilyKind kind, double tol) {
  return RLFamily(order, std::make_shared<const Generator>(gen), kind, tol);
}

SingularTrajectory sample_family(const RLFamily& fam, const std::vector<double>& grid) {
  std::vector<Matrix> samples;
  samples.reserve(grid.size());
  for (double t : grid) {
    if (!(t > 0.0)) throw Error(ErrorCode::invalid_argument, "sample grid must be positive");
    samples.push_back(fam.regular(t));
  }
  return SingularTrajectory(fam.exponent(), grid, std::move(samples), fam.g0(),
                            [fam](double t) { return fam.regular(t); });
}

Matrix jalpha_family(const RLFamily& fam, double t) {
  if (fam.kind() != FamilyKind::riemann_liouville) {
    throw Error(ErrorCode::invalid_argument, "jalpha_family applies to Riemann-Liouville families");
  }
  return fam.jalpha(t);
}

GridType parse_grid_type(std::string_view text) {
  if (text == "geometric") return GridType::geometric;
  if (text == "uniform") return GridType::uniform;
  if (text == "mixed") return GridType::mixed;
  throw Error(ErrorCode::invalid_argument, "unknown grid type '" + std::string(text) + "'");
}

std::string_view to_string(GridType type) {
  switch (type) {
    case GridType::geometric: return "geometric";
    case GridType::uniform: return "uniform";
    case GridType::mixed: return "mixed";
  }
  return "mixed";
}

std::vector<double> make_grid(const GridSpec& spec) {
  if (!(spec.horizon > 0.0) || !std::isfinite(spec.horizon)) {
    throw Error(ErrorCode::invalid_argument, "grid horizon must be positive");
  }
  if (spec.count < 1) throw Error(ErrorCode::invalid_argument, "grid count must be positive");
  std::vector<double> grid;
  if (spec.type != GridType::uniform) {
    for (int k = 0; k < spec.count; ++k) grid.push_back(std::ldexp(spec.horizon, -k));
  }
  if (spec.type != GridType::geometric) {
    for (int i = 1; i <= spec.count; ++i) grid.push_back(spec.horizon * i / spec.count);
  }
  std::sort(grid.begin(), grid.end());
  std::vector<double> unique;
  for (double t : grid) {
    if (unique.empty() || t - unique.back() > 1e-12 * t) unique.push_back(t);
  }
  return unique;
}

namespace {

InitialCertification certify_initial_layer(const RLFamily& fam, const Vector& x,
                                           const CauchyOptions& options) {
  const double alpha = fam.order().alpha();
  const double gamma_am1 = std::tgamma(fam.order().alpha_m1());
  InitialCertification cert;

  // Gamma(alpha-1) t^(2-alpha) u(t) = Gamma(alpha-1) G(t) x = x + O(t^alpha).
  const double t1 = 1e-3;
  const double t2 = 1e-4;
  const Vector v1 = gamma_am1 * (fam.regular(t1) * x);
  const Vector v2 = gamma_am1 * (fam.regular(t2) * x);
  const double r = std::pow(t2 / t1, alpha);
  cert.limit = (v2 - r * v1) / (1.0 - r);
  cert.limit_error = (cert.limit - x).norm() / (1.0 + x.norm());
  cert.limit_passed = cert.limit_error <= options.limit_tolerance;

  // d/dt J^(2-alpha) u behaves like t^(alpha-1) A x / Gamma(alpha).
  cert.slope_threshold = alpha - 1.0 - 0.05;
  const Vector ax = fam.generator().entries() * x;
  if (ax.norm() <= 1e-14 * fam.generator().norm() * x.norm() || ax.norm() == 0.0) {
    cert.derivative_vanishes = true;
    cert.slope_passed = true;
    return cert;
  }
  const RegularFn g = [&fam, &x](double s) { return Matrix(fam.regular(s) * x); };
  const int points = 9;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = std::pow(10.0, -3.0 + 2.0 * i / (points - 1));
    const double h = t / 8.0;
    const Matrix jp = jacobi_integral(g, fam.exponent(), 2.0 - alpha, t + h, options.quad_order);
    const Matrix jm = jacobi_integral(g, fam.exponent(), 2.0 - alpha, t - h, options.quad_order);
    const double w = ((jp - jm) / (2.0 * h)).norm();
    cert.slope_times.push_back(t);
    cert.slope_values.push_back(w);
    const double lx = std::log(t);
    const double ly = std::log(std::max(w, std::numeric_limits<double>::min()));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  cert.slope = (points * sxy - sx * sy) / (points * sxx - sx * sx);
  cert.slope_passed = cert.slope >= cert.slope_threshold;
  return cert;
}

}  // namespace

CauchySolution solve_rl_cauchy(const FracOrder& order, const Generator& gen, const Vector& x,
                               const std::vector<double>& grid, const CauchyOptions& options) {
  if (x.size() != gen.dim()) {
    throw Error(ErrorCode::invalid_argument, "initial vector dimension " + std::to_string(x.size()) +
                                                 " does not match generator dimension " +
                                                 std::to_string(gen.dim()));
  }
  const RLFamily fam = build_family(order, gen, FamilyKind::riemann_liouville, options.tol);
  std::vector<Matrix> samples;
  samples.reserve(grid.size());
  for (double t : grid) {
    if (!(t > 0.0)) throw Error(ErrorCode::invalid_argument, "solution grid must be positive");
    samples.push_back(fam.regular(t) * x);
  }
  SingularTrajectory traj(fam.exponent(), grid, std::move(samples), fam.g0() * x,
                          [fam, x](double t) { return Matrix(fam.regular(t) * x); });
  return {std::move(traj), certify_initial_layer(fam, x, options)};
}

}  // namespace rlfrac
