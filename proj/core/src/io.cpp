#include "rlfrac/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rlfrac/error.hpp"

namespace rlfrac {

Generator parse_generator(const std::string& json_text, const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io_error, origin + ": " + e.what());
  }
  try {
    const auto& rows = j.at("rows");
    const auto dim = j.contains("dim") ? j.at("dim").get<std::size_t>() : rows.size();
    if (dim == 0 || rows.size() != dim) {
      throw Error(ErrorCode::io_error, origin + ": expected " + std::to_string(dim) + " rows");
    }
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (rows.at(i).size() != dim) {
        throw Error(ErrorCode::io_error, origin + ": row " + std::to_string(i) + " has wrong length");
      }
      for (std::size_t k = 0; k < dim; ++k) {
        const auto& e = rows.at(i).at(k);
        if (e.is_number()) {
          m(i, k) = e.get<double>();
        } else if (e.is_array() && e.size() == 2) {
          m(i, k) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
        } else {
          throw Error(ErrorCode::io_error, origin + ": entry must be a number or [re, im]");
        }
      }
    }
    return Generator(std::move(m));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::io_error, origin + ": " + e.what());
  }
}

Generator load_generator(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot read generator file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_generator(ss.str(), path.string());
}

void save_generator(const Matrix& entries, const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["dim"] = entries.rows();
  nlohmann::ordered_json rows = nlohmann::json::array();
  const bool complex = entries.imag().cwiseAbs().maxCoeff() > 0.0;
  for (Eigen::Index i = 0; i < entries.rows(); ++i) {
    nlohmann::ordered_json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < entries.cols(); ++k) {
      if (complex) {
        row.push_back({entries(i, k).real(), entries(i, k).imag()});
      } else {
        row.push_back(entries(i, k).real());
      }
    }
    rows.push_back(row);
  }
  j["rows"] = rows;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace rlfrac
