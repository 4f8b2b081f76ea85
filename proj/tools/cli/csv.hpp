#pragma once

#include <string>
#include <vector>

namespace mdecon::cli {

//! Formats a double with enough digits to round-trip exactly ("%.17g" with a
//! "." decimal point, locale-independent) so repeated runs are byte-identical.
std::string format_double(double value);

//! Writes a CSV file: one fixed header row, then `rows`; all cells are
//! pre-formatted strings joined with commas. Throws on I/O failure.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace mdecon::cli
