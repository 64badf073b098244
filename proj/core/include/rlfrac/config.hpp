#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rlfrac/family.hpp"
#include "rlfrac/verifier.hpp"

namespace rlfrac {

/// Names accepted in the "checks" list.
inline const std::vector<std::string> kKnownChecks = {"resolvent", "cosine",  "generator",
                                                      "caputo",    "laplace", "uniqueness"};

/// One JSON document describing a run. Relative paths resolve against the
/// directory of the config file.
struct RunConfig {
  double alpha = 1.5;
  std::filesystem::path generator_path;
  FamilyKind kind = FamilyKind::riemann_liouville;
  GridSpec grid;
  int quad_order = 32;
  double ml_tol = kDefaultMLTolerance;
  std::optional<std::vector<double>> initial;  // x for solve; default e_1
  std::map<std::string, double> tolerances;    // per check id, overrides defaults
  std::vector<std::string> checks = {"resolvent", "cosine"};
  std::optional<std::vector<TimePair>> pairs;
  std::optional<std::vector<TimePair>> laplace_points;
  double laplace_horizon = 40.0;
  std::filesystem::path out_dir = "out";

  /// Tolerance for a check id ("laplace-closed", "cosine", ...), defaulted.
  double tolerance(const std::string& check_id) const;

  /// Throws Error(invalid_argument) describing the first violated invariant.
  void validate() const;
};

RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir,
                       const std::string& origin = "<string>");
RunConfig load_config(const std::filesystem::path& path);

/// "resolvent,cosine" -> {"resolvent", "cosine"}; rejects unknown names.
std::vector<std::string> parse_check_list(const std::string& text);

}  // namespace rlfrac
