#include "rlfrac/oracle.hpp"

#include <cmath>
#include <sstream>

#include "rlfrac/error.hpp"
#include "rlfrac/gamma.hpp"

namespace rlfrac {

Matrix FamilyOracle::operator()(double t) const {
  if (!(t > 0.0)) throw Error(ErrorCode::out_of_range, "family is defined for t > 0 only");
  return std::pow(t, exponent) * regular(t);
}

FamilyOracle make_oracle(const RLFamily& fam, std::string label) {
  FamilyOracle o;
  if (label.empty()) {
    std::ostringstream os;
    os << to_string(fam.kind()) << "(alpha=" << fam.order().alpha() << ",dim=" << fam.generator().dim()
       << ")";
    label = os.str();
  }
  o.label = std::move(label);
  o.kind = fam.kind();
  o.exponent = fam.exponent();
  o.dim = fam.generator().dim();
  o.regular = [fam](double t) { return fam.regular(t); };
  o.jalpha = [fam](double t) { return fam.jalpha(t); };
  o.laplace = [fam](double lambda) { return fam.laplace(lambda); };
  o.generator = fam.generator().entries();
  o.growth = fam.growth_bound();
  return o;
}

namespace {

FamilyOracle add_power(const FamilyOracle& oracle, const FracOrder& order, double eps, double power,
                       std::string label) {
  if (!(power > -1.0)) throw Error(ErrorCode::invalid_argument, "perturbation power must exceed -1");
  FamilyOracle o = oracle;
  o.label = std::move(label);
  const Eigen::Index n = oracle.dim;
  const double shift = power - oracle.exponent;
  o.regular = [base = oracle.regular, eps, shift, n](double t) {
    return Matrix(base(t) + (eps * std::pow(t, shift)) * Matrix::Identity(n, n));
  };
  if (oracle.jalpha) {
    // J^alpha t^q = Gamma(q+1)/Gamma(q+1+alpha) t^(q+alpha)
    const double alpha = order.alpha();
    const double coef = std::tgamma(power + 1.0) * reciprocal_gamma(power + 1.0 + alpha);
    o.jalpha = [base = oracle.jalpha, eps, coef, power, alpha, n](double t) {
      return Matrix(base(t) + (eps * coef * std::pow(t, power + alpha)) * Matrix::Identity(n, n));
    };
  }
  o.laplace = {};
  return o;
}

}  // namespace

FamilyOracle corrupt(const FamilyOracle& oracle, const FracOrder& order, double eps, double power) {
  std::ostringstream os;
  os << oracle.label << "+corrupt(" << eps << ",t^" << power << ")";
  FamilyOracle o = add_power(oracle, order, eps, power, os.str());
  o.generator.reset();
  return o;
}

FamilyOracle perturb_keeping_generator(const FamilyOracle& oracle, const FracOrder& order,
                                       double eps) {
  std::ostringstream os;
  os << oracle.label << "+perturb(" << eps << ")";
  return add_power(oracle, order, eps, 2.0 * order.alpha(), os.str());
}

}  // namespace rlfrac
