#include "steinernet/config.hpp"

#include <fstream>
#include <sstream>

#include "steinernet/errors.hpp"

namespace steinernet {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

double ToolConfig::tolerance(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

ToolConfig parse_config(const std::string& text) {
  ToolConfig config;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(line_no);
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      std::size_t used = 0;
      if (key == "seed") {
        config.seed = std::stoull(value, &used);
      } else if (key == "precision") {
        config.output_precision = std::stoi(value, &used);
        if (config.output_precision < 6 || config.output_precision > 17) {
          throw Error(ErrorCode::ParseError, where + ": precision must lie in [6, 17]");
        }
      } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
        const double v = std::stod(value, &used);
        if (!(v > 0.0)) throw Error(ErrorCode::ParseError, where + ": tolerances must be positive");
        config.tolerances[key.substr(4)] = v;
      } else {
        throw Error(ErrorCode::ParseError, where + ": unknown key '" + key + "'");
      }
      if (used != value.size()) throw Error(ErrorCode::ParseError, where + ": trailing characters");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, where + ": bad value '" + value + "'");
    }
  }
  return config;
}

ToolConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace steinernet
