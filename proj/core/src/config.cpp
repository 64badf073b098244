#include "rlfrac/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rlfrac/error.hpp"

namespace rlfrac {

namespace {

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> table = {
      {"resolvent", kResolventTolerance},
      {"cosine", kCosineTolerance},
      {"generator", kGeneratorTolerance},
      {"caputo", kCaputoTolerance},
      {"laplace-closed", kLaplaceClosedTolerance},
      {"laplace-numeric", kLaplaceNumericTolerance},
      {"uniqueness", kUniquenessTolerance},
  };
  return table;
}

std::vector<TimePair> parse_pairs(const nlohmann::json& j) {
  std::vector<TimePair> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw Error(ErrorCode::invalid_argument, "pairs must be [a, b] arrays");
    }
    out.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

double RunConfig::tolerance(const std::string& check_id) const {
  if (auto it = tolerances.find(check_id); it != tolerances.end()) return it->second;
  if (auto it = default_tolerances().find(check_id); it != default_tolerances().end()) return it->second;
  throw Error(ErrorCode::invalid_argument, "no tolerance known for check '" + check_id + "'");
}

void RunConfig::validate() const {
  if (!(alpha > 1.0 && alpha < 2.0)) {
    throw Error(ErrorCode::invalid_argument, "alpha must lie in (1, 2), got " + std::to_string(alpha));
  }
  if (generator_path.empty()) throw Error(ErrorCode::invalid_argument, "config lacks a generator path");
  if (quad_order < 8) throw Error(ErrorCode::invalid_argument, "quad_order must be at least 8");
  if (!(ml_tol > 1e-15 && ml_tol < 1e-2)) {
    throw Error(ErrorCode::invalid_argument, "ml_tol must lie in (1e-15, 1e-2)");
  }
  if (!(grid.horizon > 0.0) || grid.count < 1) {
    throw Error(ErrorCode::invalid_argument, "grid needs T > 0 and count >= 1");
  }
  for (const auto& [id, tol] : tolerances) {
    if (!default_tolerances().count(id)) {
      throw Error(ErrorCode::invalid_argument, "unknown tolerance key '" + id + "'");
    }
    if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance for " + id + " must be positive");
  }
  for (const auto& c : checks) {
    if (std::find(kKnownChecks.begin(), kKnownChecks.end(), c) == kKnownChecks.end()) {
      throw Error(ErrorCode::invalid_argument, "unknown check '" + c + "'");
    }
  }
  if (!(laplace_horizon > 1.0)) throw Error(ErrorCode::invalid_argument, "laplace horizon must exceed 1");
  if (pairs) {
    for (const auto& [t, s] : *pairs) {
      if (!(t > 0.0) || !(s > 0.0)) throw Error(ErrorCode::invalid_argument, "pairs must be positive");
    }
  }
  if (out_dir.empty()) throw Error(ErrorCode::invalid_argument, "output directory must be set");
}

RunConfig parse_config(const std::string& json_text, const std::filesystem::path& base_dir,
                       const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, origin + ": " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::invalid_argument, origin + ": config must be a JSON object");

  static const std::set<std::string> known = {"alpha",   "generator",  "kind",    "grid",
                                              "quad_order", "ml_tol",  "initial", "tolerances",
                                              "checks",  "pairs",      "laplace", "out"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw Error(ErrorCode::invalid_argument, origin + ": unknown key '" + key + "'");
  }

  RunConfig c;
  try {
    c.alpha = j.value("alpha", c.alpha);
    if (j.contains("generator")) {
      std::filesystem::path g = j.at("generator").get<std::string>();
      c.generator_path = g.is_absolute() ? g : base_dir / g;
    }
    if (j.contains("kind")) c.kind = parse_family_kind(j.at("kind").get<std::string>());
    if (j.contains("grid")) {
      const auto& g = j.at("grid");
      if (g.contains("type")) c.grid.type = parse_grid_type(g.at("type").get<std::string>());
      c.grid.horizon = g.value("T", c.grid.horizon);
      c.grid.count = g.value("count", c.grid.count);
    }
    c.quad_order = j.value("quad_order", c.quad_order);
    c.ml_tol = j.value("ml_tol", c.ml_tol);
    if (j.contains("initial")) c.initial = j.at("initial").get<std::vector<double>>();
    if (j.contains("tolerances")) c.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
    if (j.contains("checks")) c.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("pairs")) c.pairs = parse_pairs(j.at("pairs"));
    if (j.contains("laplace")) {
      const auto& l = j.at("laplace");
      if (l.contains("points")) c.laplace_points = parse_pairs(l.at("points"));
      c.laplace_horizon = l.value("horizon", c.laplace_horizon);
    }
    if (j.contains("out")) {
      std::filesystem::path o = j.at("out").get<std::string>();
      c.out_dir = o.is_absolute() ? o : base_dir / o;
    } else {
      c.out_dir = base_dir / c.out_dir;
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, origin + ": " + e.what());
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path(), path.string());
}

std::vector<std::string> parse_check_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    if (std::find(kKnownChecks.begin(), kKnownChecks.end(), item) == kKnownChecks.end()) {
      throw Error(ErrorCode::invalid_argument, "unknown check '" + item + "'");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  return out;
}

}  // namespace rlfrac
