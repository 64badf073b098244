#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "rlfrac/error.hpp"
#include "rlfrac/trajectory.hpp"

namespace rlfrac {
namespace {

Matrix scalar(Complex v) { return Matrix::Constant(1, 1, v); }

SingularTrajectory from_function(double p, const std::vector<double>& grid, double (*g)(double)) {
  std::vector<Matrix> samples;
  for (double t : grid) samples.push_back(scalar(g(t)));
  return SingularTrajectory(p, grid, samples, scalar(g(0.0)));
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("rlfrac_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

TEST(SingularTrajectory, InterpolantReproducesSamplesAndStaysMonotone) {
  std::vector<double> grid;
  for (int i = 1; i <= 20; ++i) grid.push_back(0.1 * i * i / 20.0);
  const auto traj = from_function(-0.5, grid, [](double t) { return std::sqrt(t); });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(traj.interpolate(grid[i])(0, 0).real(), std::sqrt(grid[i]), 1e-15);
  }
  double prev = traj.interpolate(0.0)(0, 0).real();
  for (int k = 1; k <= 2000; ++k) {
    const double v = traj.interpolate(grid.back() * k / 2000.0)(0, 0).real();
    EXPECT_GE(v, prev - 1e-15);
    prev = v;
  }
}

TEST(SingularTrajectory, NoOvershootOnStepData) {
  const std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<Matrix> samples = {scalar(0.0), scalar(0.0), scalar(1.0), scalar(1.0), scalar(1.0)};
  const SingularTrajectory traj(0.0, grid, samples, scalar(0.0));
  for (int k = 0; k <= 500; ++k) {
    const double v = traj.interpolate(0.5 * k / 500.0)(0, 0).real();
    EXPECT_GE(v, -1e-15);
    EXPECT_LE(v, 1.0 + 1e-15);
  }
}

TEST(SingularTrajectory, ValueCarriesSingularPower) {
  const auto traj = from_function(-0.5, {0.5, 1.0}, [](double) { return 2.0; });
  EXPECT_NEAR(traj.value(0.25)(0, 0).real(), 2.0 / 0.5, 1e-14);
  EXPECT_THROW(traj.value(0.0), Error);
  EXPECT_THROW(traj.regular(1.5), Error);
}

TEST(SingularTrajectory, RejectsBadGrids) {
  EXPECT_THROW(SingularTrajectory(0.0, {0.0, 1.0}, {scalar(1), scalar(1)}, scalar(1)), Error);
  EXPECT_THROW(SingularTrajectory(0.0, {0.5, 0.5}, {scalar(1), scalar(1)}, scalar(1)), Error);
  EXPECT_THROW(SingularTrajectory(0.0, {0.5}, {scalar(1), scalar(1)}, scalar(1)), Error);
  EXPECT_THROW(SingularTrajectory(0.0, {0.5}, {Matrix::Zero(2, 2)}, scalar(1)), Error);
}

TEST(SingularTrajectory, ContinuityDefect) {
  std::vector<double> grid;
  for (int i = 1; i <= 32; ++i) grid.push_back(i / 32.0);
  const auto smooth = from_function(0.0, grid, [](double t) { return std::cos(t); });
  EXPECT_LT(smooth.continuity_defect(), 1e-3);
  EXPECT_NO_THROW(smooth.require_continuity(1e-3));

  std::vector<Matrix> jumpy;
  for (std::size_t i = 0; i < grid.size(); ++i) jumpy.push_back(scalar(i == 10 ? 5.0 : 1.0));
  const SingularTrajectory bad(0.0, grid, jumpy, scalar(1.0));
  EXPECT_THROW(bad.require_continuity(1e-3), Error);
}

TEST(SingularTrajectory, CsvRoundTripMatrix) {
  const auto dir = temp_dir("roundtrip_matrix");
  const std::vector<double> grid = {0.125, 0.25, 0.5, 1.0};
  std::vector<Matrix> samples;
  for (double t : grid) {
    Matrix m(2, 2);
    m << t, Complex(0.0, t * t), -1.0, 1.0 / 3.0;
    samples.push_back(m);
  }
  Matrix g0(2, 2);
  g0 << 0.0, 0.0, -1.0, 1.0 / 3.0;
  const SingularTrajectory traj(-0.25, grid, samples, g0);
  write_trajectory(traj, dir / "f.csv", dir / "f.json");

  std::ifstream csv(dir / "f.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "t,T_0_0_re,T_0_0_im,T_0_1_re,T_0_1_im,T_1_0_re,T_1_0_im,T_1_1_re,T_1_1_im");

  const auto back = read_trajectory(dir / "f.csv", dir / "f.json");
  EXPECT_EQ(back.exponent(), -0.25);
  EXPECT_EQ(back.grid(), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_LE((back.samples()[i] - samples[i]).norm(), 1e-15);
  }
  EXPECT_EQ(back.g0(), g0);
}

TEST(SingularTrajectory, CsvVectorHeader) {
  const auto dir = temp_dir("roundtrip_vector");
  Matrix v(2, 1);
  v << 1.0, 2.0;
  const SingularTrajectory traj(0.0, {1.0}, {v}, v);
  write_trajectory(traj, dir / "u.csv", dir / "u.json");
  std::ifstream csv(dir / "u.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "t,u_0,u_1");
}

TEST(SingularTrajectory, ReadErrorsNamePath) {
  const auto dir = temp_dir("read_errors");
  try {
    read_trajectory(dir / "missing.csv", dir / "missing.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::io_error);
    EXPECT_NE(std::string(e.what()).find("missing.json"), std::string::npos);
  }
}

}  // namespace
}  // namespace rlfrac
