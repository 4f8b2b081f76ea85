#include "csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mdecon::cli {

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path, std::ios::binary);  // binary: same bytes everywhere
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  auto write_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  write_row(header);
  for (const auto& row : rows) write_row(row);
  if (!out) {
    throw std::runtime_error("failed while writing '" + path + "'");
  }
}

}  // namespace mdecon::cli
