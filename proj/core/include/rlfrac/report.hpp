#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace rlfrac {

/// One check outcome. passed == (rel_residual <= tolerance).
struct ResidualReport {
  std::string check_id;
  std::string family;
  std::vector<std::vector<double>> points;  // (t), (t, s) or (lambda, mu)
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  int quadrature_order = 0;
  std::string note;

  /// Sets passed from rel_residual and tolerance.
  void finalize();
};

/// ||L - R|| / (1 + max(||L||, ||R||)).
double normalized_residual(double diff_norm, double lhs_norm, double rhs_norm);

std::string to_json_line(const ResidualReport& report);
ResidualReport from_json_line(const std::string& line);

/// Append-only collection of reports in insertion order.
class ReportLog {
 public:
  void append(ResidualReport report);
  const std::vector<ResidualReport>& reports() const noexcept { return reports_; }
  bool all_passed() const;

  void write_jsonl(const std::filesystem::path& path) const;
  void write_csv_summary(const std::filesystem::path& path) const;

 private:
  std::vector<ResidualReport> reports_;
};

}  // namespace rlfrac
