#pragma once

#include <filesystem>
#include <string>

#include "rlfrac/generator.hpp"

namespace rlfrac {

/// Generator file: {"dim": n, "rows": [[...], ...]}. Entries are numbers or
/// [re, im] pairs. Throws Error(io_error) naming the path on any problem.
Generator load_generator(const std::filesystem::path& path);
Generator parse_generator(const std::string& json_text, const std::string& origin = "<string>");
void save_generator(const Matrix& entries, const std::filesystem::path& path);

}  // namespace rlfrac
