#pragma once

#include "darboux/system_file.hpp"

#include <optional>
#include <string>
#include <vector>

namespace darboux {

struct CatalogEntry {
  std::string name;
  std::string text;
};

/// Catalog systems sorted by name: the built-in set, or the *.sys files of
/// $DARBOUX_CATALOG_DIR when that variable is set.
std::vector<CatalogEntry> catalog_entries();
std::optional<std::string> catalog_text(const std::string& name);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct EntryVerification {
  std::string system;
  std::vector<CheckResult> checks;
  std::vector<std::string> flags;  // known disagreements with printed values
  bool passed() const;
};

/// Recomputes every expectation of a loaded system.
EntryVerification verify_entry(const LoadedSystem& s);

}  // namespace darboux
