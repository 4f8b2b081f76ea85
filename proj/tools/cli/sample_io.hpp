#pragma once

#include <string>
#include <vector>

namespace mdecon::cli {

//! Reads a sample file: UTF-8 text, one strictly positive decimal per line,
//! everything after a '#' ignored, blank lines skipped. Rejects non-numeric,
//! non-positive, or non-finite entries with a `std::runtime_error` naming the
//! file and the offending 1-based line number.
std::vector<double> read_sample_file(const std::string& path);

}  // namespace mdecon::cli
