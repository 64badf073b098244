#include "rlfrac/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "rlfrac/error.hpp"

namespace rlfrac {

void ResidualReport::finalize() {
  if (!(abs_residual >= 0.0) || !(rel_residual >= 0.0)) {
    // NaN residuals never pass.
    passed = false;
    return;
  }
  passed = rel_residual <= tolerance;
}

double normalized_residual(double diff_norm, double lhs_norm, double rhs_norm) {
  return diff_norm / (1.0 + std::max(lhs_norm, rhs_norm));
}

std::string to_json_line(const ResidualReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["family"] = r.family;
  j["points"] = r.points;
  j["abs_residual"] = r.abs_residual;
  j["rel_residual"] = r.rel_residual;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["quadrature_order"] = r.quadrature_order;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

ResidualReport from_json_line(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    ResidualReport r;
    r.check_id = j.at("check_id").get<std::string>();
    r.family = j.value("family", std::string{});
    r.points = j.at("points").get<std::vector<std::vector<double>>>();
    r.abs_residual = j.at("abs_residual").get<double>();
    r.rel_residual = j.at("rel_residual").get<double>();
    r.tolerance = j.at("tolerance").get<double>();
    r.passed = j.at("passed").get<bool>();
    r.quadrature_order = j.value("quadrature_order", 0);
    r.note = j.value("note", std::string{});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io_error, std::string("bad report line: ") + e.what());
  }
}

void ReportLog::append(ResidualReport report) { reports_.push_back(std::move(report)); }

bool ReportLog::all_passed() const {
  return std::all_of(reports_.begin(), reports_.end(), [](const auto& r) { return r.passed; });
}

void ReportLog::write_jsonl(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path.string());
  for (const auto& r : reports_) out << to_json_line(r) << '\n';
  if (!out) throw Error(ErrorCode::io_error, "failed writing " + path.string());
}

void ReportLog::write_csv_summary(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path.string());
  out << "check_id,family,points,abs_residual,rel_residual,tolerance,passed,quadrature_order\n";
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (const auto& r : reports_) {
    out << r.check_id << ",\"" << r.family << "\"," << r.points.size() << ',' << num(r.abs_residual)
        << ',' << num(r.rel_residual) << ',' << num(r.tolerance) << ',' << (r.passed ? "true" : "false")
        << ',' << r.quadrature_order << '\n';
  }
  if (!out) throw Error(ErrorCode::io_error, "failed writing " + path.string());
}

}  // namespace rlfrac
