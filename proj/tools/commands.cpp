#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "rlfrac/config.hpp"
#include "rlfrac/error.hpp"
#include "rlfrac/family.hpp"
#include "rlfrac/io.hpp"
#include "rlfrac/mittag_leffler.hpp"
#include "rlfrac/oracle.hpp"
#include "rlfrac/trajectory.hpp"
#include "rlfrac/verifier.hpp"

namespace rlfrac::cli {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Context {
  RunConfig config;
  Generator generator;
};

// Loads, overrides and validates the configuration, then the generator, and
// creates the output directory. Everything here happens before computation.
Context prepare(const CommonOptions& common) {
  if (common.config.empty()) throw Error(ErrorCode::invalid_argument, "--config is required");
  RunConfig config = load_config(common.config);
  if (common.alpha) config.alpha = *common.alpha;
  if (common.out) config.out_dir = *common.out;
  if (common.quad_order) config.quad_order = *common.quad_order;
  config.validate();
  Generator gen = load_generator(config.generator_path);
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec || !std::filesystem::is_directory(config.out_dir)) {
    throw Error(ErrorCode::io_error, "cannot create output directory " + config.out_dir.string());
  }
  return {std::move(config), std::move(gen)};
}

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageOrRuntime;
}

void print_matrix(std::ostream& out, const Matrix& m) {
  const bool complex = m.imag().cwiseAbs().maxCoeff() > 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << num(m(i, j).real());
      if (complex) out << (m(i, j).imag() < 0 ? "-" : "+") << num(std::abs(m(i, j).imag())) << 'i';
    }
    out << '\n';
  }
}

}  // namespace

int cmd_eval_ml(double alpha, double beta, Complex z, double tol, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const MittagLeffler kernel({alpha, beta}, tol);
    const MLEvaluation e = kernel.evaluate(z);
    out << "value = " << num(e.value.real()) << '\n';
    out << "imag = " << num(e.value.imag()) << '\n';
    out << "error_estimate = " << num(e.error_estimate) << '\n';
    out << "branch = " << to_string(e.branch) << '\n';
    out << "terms = " << e.terms << '\n';
    return static_cast<int>(kPass);
  });
}

int cmd_build(const CommonOptions& common, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Context ctx = prepare(common);
    const auto& c = ctx.config;
    const RLFamily fam = build_family(FracOrder(c.alpha), ctx.generator, c.kind, c.ml_tol);
    const auto grid = make_grid(c.grid);
    const SingularTrajectory traj = sample_family(fam, grid);
    const auto csv = c.out_dir / "family.csv";
    const auto json = c.out_dir / "family.json";
    write_trajectory(traj, csv, json);
    out << "kind = " << to_string(c.kind) << '\n';
    out << "alpha = " << num(c.alpha) << '\n';
    out << "points = " << grid.size() << '\n';
    out << "continuity_defect = " << num(traj.continuity_defect()) << '\n';
    out << "wrote " << csv.string() << '\n';
    out << "wrote " << json.string() << '\n';
    return static_cast<int>(kPass);
  });
}

int cmd_solve(const CommonOptions& common, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Context ctx = prepare(common);
    const auto& c = ctx.config;
    if (c.kind != FamilyKind::riemann_liouville) {
      throw Error(ErrorCode::invalid_argument, "solve requires kind \"rl\"");
    }
    Vector x = Vector::Zero(ctx.generator.dim());
    if (c.initial) {
      if (static_cast<Eigen::Index>(c.initial->size()) != x.size()) {
        throw Error(ErrorCode::invalid_argument, "initial vector has " + std::to_string(c.initial->size()) +
                                                     " entries, generator dimension is " +
                                                     std::to_string(x.size()));
      }
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = (*c.initial)[i];
    } else {
      x(0) = 1.0;
    }
    CauchyOptions options;
    options.tol = c.ml_tol;
    const CauchySolution sol = solve_rl_cauchy(FracOrder(c.alpha), ctx.generator, x, make_grid(c.grid), options);
    const auto csv = c.out_dir / "solution.csv";
    const auto json = c.out_dir / "solution.json";
    write_trajectory(sol.trajectory, csv, json);
    const auto& cert = sol.certification;
    out << "limit_error = " << num(cert.limit_error) << (cert.limit_passed ? " PASS" : " FAIL") << '\n';
    if (cert.derivative_vanishes) {
      out << "weighted_derivative = vanishes PASS\n";
    } else {
      out << "weighted_derivative_slope = " << num(cert.slope) << " threshold " << num(cert.slope_threshold)
          << (cert.slope_passed ? " PASS" : " FAIL") << '\n';
    }
    out << "wrote " << csv.string() << '\n';
    out << "wrote " << json.string() << '\n';
    return static_cast<int>(cert.passed() ? kPass : kCertificationFailed);
  });
}

int cmd_verify(const CommonOptions& common, const VerifyOptions& verify, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Context ctx = prepare(common);
    const auto& c = ctx.config;
    const auto checks = verify.checks ? parse_check_list(*verify.checks) : c.checks;
    if (checks.empty()) throw Error(ErrorCode::invalid_argument, "no checks selected");
    if (verify.corrupt && !(*verify.corrupt >= 0.0)) {
      throw Error(ErrorCode::invalid_argument, "--corrupt must be non-negative");
    }

    const FracOrder order(c.alpha);
    auto oracle_for = [&](FamilyKind kind, Generator::Spectral spectral, const std::string& label) {
      const Generator gen(ctx.generator.entries(), spectral);
      FamilyOracle o = make_oracle(build_family(order, gen, kind, c.ml_tol), label);
      if (verify.corrupt && *verify.corrupt > 0.0) o = corrupt(o, order, *verify.corrupt);
      return o;
    };
    const FamilyOracle rl = oracle_for(FamilyKind::riemann_liouville, Generator::Spectral::compute, "rl");
    const auto pairs = c.pairs ? *c.pairs : default_pairs(c.alpha);

    ReportLog log;
    for (const auto& check : checks) {
      if (check == "resolvent") {
        log.append(check_resolvent_equation(rl, order, pairs, {c.quad_order, c.tolerance("resolvent")}));
      } else if (check == "cosine") {
        log.append(check_cosine_equation(rl, order, pairs, {c.quad_order, c.tolerance("cosine")}));
      } else if (check == "generator") {
        RecoveryOptions options;
        options.quad_order = c.quad_order;
        options.tolerance = c.tolerance("generator");
        log.append(recover_generator(rl, order, options).report);
      } else if (check == "caputo") {
        const FamilyOracle cap = oracle_for(FamilyKind::caputo, Generator::Spectral::compute, "caputo");
        log.append(check_caputo_resolvent(cap, order, pairs, {c.quad_order, c.tolerance("caputo")}));
      } else if (check == "laplace") {
        LaplaceOptions options;
        options.horizon = c.laplace_horizon;
        options.closed_tolerance = c.tolerance("laplace-closed");
        options.numeric_tolerance = c.tolerance("laplace-numeric");
        const auto points = c.laplace_points ? *c.laplace_points : default_laplace_points(rl);
        for (auto& r : check_laplace_identity(rl, order, points, options)) log.append(std::move(r));
      } else if (check == "uniqueness") {
        const FamilyOracle series =
            oracle_for(FamilyKind::riemann_liouville, Generator::Spectral::skip, "rl-series");
        log.append(check_uniqueness(rl, series, order, make_grid(c.grid),
                                    {c.quad_order, c.tolerance("uniqueness")}));
      }
    }

    const auto jsonl = c.out_dir / "report.jsonl";
    const auto csv = c.out_dir / "summary.csv";
    log.write_jsonl(jsonl);
    log.write_csv_summary(csv);
    for (const auto& r : log.reports()) {
      out << (r.passed ? "PASS " : "FAIL ") << r.check_id << " rel_residual=" << num(r.rel_residual)
          << " tolerance=" << num(r.tolerance) << '\n';
    }
    out << "wrote " << jsonl.string() << '\n';
    out << "wrote " << csv.string() << '\n';
    return static_cast<int>(log.all_passed() ? kPass : kCheckFailed);
  });
}

int cmd_recover_generator(const CommonOptions& common, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Context ctx = prepare(common);
    const auto& c = ctx.config;
    const FracOrder order(c.alpha);
    const FamilyOracle oracle =
        make_oracle(build_family(order, ctx.generator, FamilyKind::riemann_liouville, c.ml_tol), "rl");
    RecoveryOptions options;
    options.quad_order = c.quad_order;
    options.tolerance = c.tolerance("generator");
    const GeneratorRecovery rec = recover_generator(oracle, order, options);
    out << "recovered generator:\n";
    print_matrix(out, rec.quotient_form);
    out << "recovery_error = " << num(rec.recovery_error) << '\n';
    out << "form_agreement = " << num(rec.form_agreement) << '\n';
    const auto path = c.out_dir / "generator_recovered.json";
    save_generator(rec.quotient_form, path);
    out << "wrote " << path.string() << '\n';
    out << (rec.report.passed ? "PASS" : "FAIL") << '\n';
    return static_cast<int>(rec.report.passed ? kPass : kCheckFailed);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann-Liouville fractional resolvent toolkit"};
  app.require_subcommand(1);

  double ml_alpha = 1.0, ml_beta = 1.0, z_re = 0.0, z_im = 0.0, ml_tol = kDefaultMLTolerance;
  auto* eval = app.add_subcommand("eval-ml", "Evaluate the Mittag-Leffler function E_{alpha,beta}(z)");
  eval->add_option("--alpha", ml_alpha, "alpha > 0")->required();
  eval->add_option("--beta", ml_beta, "beta")->required();
  eval->add_option("--z", z_re, "real part of z")->required();
  eval->add_option("--z-imag", z_im, "imaginary part of z");
  eval->add_option("--tol", ml_tol, "tolerance in (1e-15, 1e-2)");

  CommonOptions common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--config", common.config, "JSON run configuration")->required();
    sub->add_option("--alpha", common.alpha, "override the fractional order");
    sub->add_option("--out", common.out, "override the output directory");
    sub->add_option("--quad-order", common.quad_order, "override the quadrature order");
  };
  auto* build = app.add_subcommand("build", "Sample the family on the configured grid");
  add_common(build);
  auto* solve = app.add_subcommand("solve", "Solve the Cauchy problem and certify its initial layer");
  add_common(solve);
  VerifyOptions verify;
  auto* ver = app.add_subcommand("verify", "Run functional-equation and generator checks");
  add_common(ver);
  ver->add_option("--checks", verify.checks, "comma-separated subset of resolvent,cosine,generator,caputo,laplace,uniqueness");
  ver->add_option("--corrupt", verify.corrupt, "add eps*t^2*I to the family (negative control)");
  auto* recover = app.add_subcommand("recover-generator", "Recover the generator from the family");
  add_common(recover);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kPass) : static_cast<int>(kUsageOrRuntime);
  }

  if (eval->parsed()) return cmd_eval_ml(ml_alpha, ml_beta, Complex(z_re, z_im), ml_tol, out, err);
  if (build->parsed()) return cmd_build(common, out, err);
  if (solve->parsed()) return cmd_solve(common, out, err);
  if (ver->parsed()) return cmd_verify(common, verify, out, err);
  if (recover->parsed()) return cmd_recover_generator(common, out, err);
  return kUsageOrRuntime;
}

}  // namespace rlfrac::cli
