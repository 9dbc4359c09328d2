#pragma once

#include <string>
#include <vector>

namespace feasreg {

struct FactResult {
  std::string id;
  std::string description;
  bool passed = false;
  /// One line per individual comparison, prefixed "ok" or "MISMATCH".
  std::vector<std::string> details;
};

/// Known fact ids, excluding the aggregate "all".
std::vector<std::string> fact_ids();

/// Recomputes one fact and compares it against the embedded reference data.
/// Throws InvalidArgument for unknown ids.
FactResult reproduce_fact(const std::string& id);

/// Every fact in registry order.
std::vector<FactResult> reproduce_all();

}  // namespace feasreg
