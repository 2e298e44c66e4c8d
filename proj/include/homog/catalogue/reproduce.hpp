#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace homog {

struct CatalogueOptions {
  std::filesystem::path data_dir;
  std::size_t maxlen = 7;
  std::size_t bound = 8;
};

struct CatalogueCell {
  std::string row;     // data file stem, e.g. "eg31"
  std::string cell;    // what was certified
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Directory of the bundled presentation and suite files.
std::filesystem::path default_data_dir();

/// Runs every machine-checkable certificate for the bundled catalogue. Each cell
/// is reported to `progress` as soon as it finishes. A cell that throws is a FAIL
/// carrying the exception message.
std::vector<CatalogueCell> reproduce_table(const CatalogueOptions& options,
                                           const std::function<void(const CatalogueCell&)>& progress = {});

/// `PASS  eg31  complete  (0.01s)  detail`
std::string format_cell(const CatalogueCell& c);

}  // namespace homog
