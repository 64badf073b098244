#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rlfrac/types.hpp"

namespace rlfrac::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsageOrRuntime = 2,
  kCertificationFailed = 3,
};

struct CommonOptions {
  std::string config;
  std::optional<double> alpha;
  std::optional<std::string> out;
  std::optional<int> quad_order;
};

struct VerifyOptions {
  std::optional<std::string> checks;  // comma-separated; overrides the config list
  std::optional<double> corrupt;      // eps of the corrupted-family negative control
};

int cmd_eval_ml(double alpha, double beta, Complex z, double tol, std::ostream& out, std::ostream& err);
int cmd_build(const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_solve(const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_verify(const CommonOptions& common, const VerifyOptions& verify, std::ostream& out,
               std::ostream& err);
int cmd_recover_generator(const CommonOptions& common, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rlfrac::cli
