#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace steinernet {

/// Settings shared by all CLI subcommands. Files are flat `key = value`
/// lines; `#` starts a comment. Recognized keys: `seed`, `precision`, and
/// `tol.<name>` for named tolerances.
struct ToolConfig {
  std::uint64_t seed = 0;
  std::map<std::string, double> tolerances;
  int output_precision = 17;

  double tolerance(const std::string& name, double fallback) const;
};

/// Throws ParseError on malformed lines, unknown keys, or precision outside [6, 17].
ToolConfig parse_config(const std::string& text);
ToolConfig load_config(const std::filesystem::path& path);

}  // namespace steinernet
