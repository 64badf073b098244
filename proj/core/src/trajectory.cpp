#include "rlfrac/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rlfrac/error.hpp"

namespace rlfrac {

namespace {

// Fritsch-Carlson slopes for one real channel.
std::vector<double> monotone_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t m = x.size();
  std::vector<double> d(m, 0.0);
  if (m < 2) return d;
  std::vector<double> h(m - 1);
  std::vector<double> delta(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    h[k] = x[k + 1] - x[k];
    delta[k] = (y[k + 1] - y[k]) / h[k];
  }
  if (m == 2) {
    d[0] = d[1] = delta[0];
    return d;
  }
  for (std::size_t k = 1; k + 1 < m; ++k) {
    if (delta[k - 1] * delta[k] <= 0.0) continue;
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    d[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
  }
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0) return 0.0;
    if (d0 * d1 <= 0.0 && std::abs(s) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return s;
  };
  d[0] = endpoint(h[0], h[1], delta[0], delta[1]);
  d[m - 1] = endpoint(h[m - 2], h[m - 3], delta[m - 2], delta[m - 3]);
  return d;
}

std::string column_base(Eigen::Index i, Eigen::Index j, bool vector) {
  return vector ? "u_" + std::to_string(i) : "T_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SingularTrajectory::SingularTrajectory(double exponent, std::vector<double> grid,
                                       std::vector<Matrix> samples, Matrix g0, RegularFn dense)
    : exponent_(exponent),
      grid_(std::move(grid)),
      samples_(std::move(samples)),
      g0_(std::move(g0)),
      dense_(std::move(dense)) {
  if (!std::isfinite(exponent_)) throw Error(ErrorCode::invalid_argument, "exponent must be finite");
  if (grid_.empty() || grid_.size() != samples_.size()) {
    throw Error(ErrorCode::invalid_argument, "trajectory needs one sample per grid point");
  }
  if (!(grid_.front() > 0.0)) throw Error(ErrorCode::invalid_argument, "trajectory grid must be positive");
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (!(grid_[i] > grid_[i - 1])) {
      throw Error(ErrorCode::invalid_argument, "trajectory grid must be strictly increasing");
    }
  }
  if (!g0_.allFinite()) throw Error(ErrorCode::invalid_argument, "g0 must be finite");
  for (const auto& s : samples_) {
    if (s.rows() != g0_.rows() || s.cols() != g0_.cols()) {
      throw Error(ErrorCode::invalid_argument, "trajectory samples must share the shape of g0");
    }
  }

  knots_.reserve(grid_.size() + 1);
  knots_.push_back(0.0);
  knots_.insert(knots_.end(), grid_.begin(), grid_.end());
  knot_values_.reserve(knots_.size());
  knot_values_.push_back(g0_);
  knot_values_.insert(knot_values_.end(), samples_.begin(), samples_.end());

  const std::size_t m = knots_.size();
  slopes_.assign(m, Matrix::Zero(g0_.rows(), g0_.cols()));
  std::vector<double> re(m);
  std::vector<double> im(m);
  for (Eigen::Index i = 0; i < g0_.rows(); ++i) {
    for (Eigen::Index j = 0; j < g0_.cols(); ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        re[k] = knot_values_[k](i, j).real();
        im[k] = knot_values_[k](i, j).imag();
      }
      const auto dr = monotone_slopes(knots_, re);
      const auto di = monotone_slopes(knots_, im);
      for (std::size_t k = 0; k < m; ++k) slopes_[k](i, j) = Complex(dr[k], di[k]);
    }
  }
}

Matrix SingularTrajectory::interpolate(double t) const {
  if (!(t >= 0.0) || t > horizon()) {
    throw Error(ErrorCode::out_of_range, "time " + format_double(t) + " outside [0, " +
                                             format_double(horizon()) + "]");
  }
  auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  std::size_t k = it == knots_.end() ? knots_.size() - 2
                                     : static_cast<std::size_t>(it - knots_.begin()) - 1;
  const double h = knots_[k + 1] - knots_[k];
  const double s = (t - knots_[k]) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  // Hermite basis; real coefficients keep real and imaginary channels separate.
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * knot_values_[k] + (h10 * h) * slopes_[k] + h01 * knot_values_[k + 1] +
         (h11 * h) * slopes_[k + 1];
}

Matrix SingularTrajectory::regular(double t) const {
  if (!(t >= 0.0) || t > horizon()) {
    throw Error(ErrorCode::out_of_range, "time " + format_double(t) + " outside [0, " +
                                             format_double(horizon()) + "]");
  }
  return dense_ ? dense_(t) : interpolate(t);
}

Matrix SingularTrajectory::value(double t) const {
  if (!(t > 0.0)) throw Error(ErrorCode::out_of_range, "trajectory is defined for t > 0 only");
  return std::pow(t, exponent_) * regular(t);
}

RegularFn SingularTrajectory::regular_fn() const {
  if (dense_) return dense_;
  return [self = *this](double t) { return self.interpolate(t); };
}

double SingularTrajectory::continuity_defect() const {
  double scale = g0_.norm();
  for (const auto& s : knot_values_) scale = std::max(scale, s.norm());
  double worst = 0.0;
  for (std::size_t k = 1; k + 1 < knots_.size(); ++k) {
    const double w = (knots_[k] - knots_[k - 1]) / (knots_[k + 1] - knots_[k - 1]);
    const Matrix linear = (1.0 - w) * knot_values_[k - 1] + w * knot_values_[k + 1];
    worst = std::max(worst, (knot_values_[k] - linear).norm());
  }
  return worst / (1.0 + scale);
}

void SingularTrajectory::require_continuity(double bound) const {
  const double defect = continuity_defect();
  if (defect > bound) {
    throw Error(ErrorCode::invalid_argument, "trajectory continuity defect " + format_double(defect) +
                                                 " exceeds bound " + format_double(bound));
  }
}

void write_trajectory(const SingularTrajectory& traj, const std::filesystem::path& csv_path,
                      const std::filesystem::path& json_path) {
  const bool vector = traj.cols() == 1;
  bool complex = traj.g0().imag().cwiseAbs().maxCoeff() > 0.0;
  for (const auto& s : traj.samples()) {
    if (complex) break;
    complex = s.imag().cwiseAbs().maxCoeff() > 0.0;
  }

  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw Error(ErrorCode::io_error, "cannot write " + csv_path.string());
  csv << "t";
  for (Eigen::Index i = 0; i < traj.rows(); ++i) {
    for (Eigen::Index j = 0; j < traj.cols(); ++j) {
      const auto base = column_base(i, j, vector);
      if (complex) {
        csv << ',' << base << "_re," << base << "_im";
      } else {
        csv << ',' << base;
      }
    }
  }
  csv << '\n';
  for (std::size_t k = 0; k < traj.grid().size(); ++k) {
    const double t = traj.grid()[k];
    const Matrix f = std::pow(t, traj.exponent()) * traj.samples()[k];
    csv << format_double(t);
    for (Eigen::Index i = 0; i < f.rows(); ++i) {
      for (Eigen::Index j = 0; j < f.cols(); ++j) {
        csv << ',' << format_double(f(i, j).real());
        if (complex) csv << ',' << format_double(f(i, j).imag());
      }
    }
    csv << '\n';
  }
  if (!csv) throw Error(ErrorCode::io_error, "failed writing " + csv_path.string());

  nlohmann::ordered_json meta;
  meta["exponent"] = traj.exponent();
  meta["rows"] = traj.rows();
  meta["cols"] = traj.cols();
  meta["dimension"] = traj.rows();
  meta["complex"] = complex;
  meta["points"] = traj.grid().size();
  nlohmann::ordered_json re = nlohmann::json::array();
  nlohmann::ordered_json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < traj.rows(); ++i) {
    nlohmann::ordered_json rr = nlohmann::json::array();
    nlohmann::ordered_json ri = nlohmann::json::array();
    for (Eigen::Index j = 0; j < traj.cols(); ++j) {
      rr.push_back(traj.g0()(i, j).real());
      ri.push_back(traj.g0()(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  meta["g0_re"] = re;
  meta["g0_im"] = im;
  std::ofstream json(json_path, std::ios::binary);
  if (!json) throw Error(ErrorCode::io_error, "cannot write " + json_path.string());
  json << meta.dump(2) << '\n';
}

SingularTrajectory read_trajectory(const std::filesystem::path& csv_path,
                                   const std::filesystem::path& json_path) {
  std::ifstream json(json_path);
  if (!json) throw Error(ErrorCode::io_error, "cannot read " + json_path.string());
  nlohmann::json meta;
  try {
    json >> meta;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io_error, json_path.string() + ": " + e.what());
  }

  double exponent = 0.0;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  bool complex = false;
  Matrix g0;
  try {
    exponent = meta.at("exponent").get<double>();
    rows = meta.at("rows").get<Eigen::Index>();
    cols = meta.at("cols").get<Eigen::Index>();
    complex = meta.value("complex", false);
    g0.resize(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        g0(i, j) = Complex(meta.at("g0_re").at(i).at(j).get<double>(),
                           meta.at("g0_im").at(i).at(j).get<double>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io_error, json_path.string() + ": " + e.what());
  }
  if (rows <= 0 || cols <= 0) throw Error(ErrorCode::io_error, json_path.string() + ": bad shape");

  std::ifstream csv(csv_path);
  if (!csv) throw Error(ErrorCode::io_error, "cannot read " + csv_path.string());
  std::string line;
  std::getline(csv, line);
  const std::size_t expected = 1 + static_cast<std::size_t>(rows * cols) * (complex ? 2 : 1);
  std::vector<double> grid;
  std::vector<Matrix> samples;
  std::size_t line_no = 1;
  while (std::getline(csv, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> values;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        values.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw Error(ErrorCode::io_error, csv_path.string() + ":" + std::to_string(line_no) +
                                             ": bad number '" + cell + "'");
      }
    }
    if (values.size() != expected) {
      throw Error(ErrorCode::io_error, csv_path.string() + ":" + std::to_string(line_no) +
                                           ": expected " + std::to_string(expected) + " columns");
    }
    const double t = values[0];
    if (!(t > 0.0)) throw Error(ErrorCode::io_error, csv_path.string() + ": non-positive time");
    Matrix g(rows, cols);
    std::size_t c = 1;
    const double scale = std::pow(t, -exponent);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        const double re = values[c++];
        const double im = complex ? values[c++] : 0.0;
        g(i, j) = scale * Complex(re, im);
      }
    }
    grid.push_back(t);
    samples.push_back(std::move(g));
  }
  return SingularTrajectory(exponent, std::move(grid), std::move(samples), std::move(g0));
}

}  // namespace rlfrac
