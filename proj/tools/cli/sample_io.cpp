#include "sample_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>

namespace mdecon::cli {

namespace {

[[noreturn]] void fail(const std::string& path, std::size_t line,
                       const std::string& what) {
  throw std::runtime_error("sample file '" + path + "' line " +
                           std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<double> read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("sample file '" + path + "': cannot open");
  }
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;  // blank or comment-only
    const auto last = line.find_last_not_of(" \t\r\n");
    const std::string token = line.substr(first, last - first + 1);

    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) {
      fail(path, line_no, "not a number: '" + token + "'");
    }
    if (!std::isfinite(value)) {
      fail(path, line_no, "entry must be finite: '" + token + "'");
    }
    if (!(value > 0.0)) {
      fail(path, line_no, "entry must be strictly positive: '" + token + "'");
    }
    values.push_back(value);
  }
  if (values.empty()) {
    throw std::runtime_error("sample file '" + path + "': no observations");
  }
  return values;
}

}  // namespace mdecon::cli
