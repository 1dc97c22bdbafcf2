#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shinv/invariants.hpp"

namespace shinv {

// Invariant report plus run metadata, ready for serialization. Keys are
// emitted sorted and reals with 12 significant digits, so output is
// deterministic for identical inputs and flags. Numeric field names are part
// of the wire contract and do not change with the unit; the "unit" field
// records how to read them.
struct ReportDocument {
  std::string input_path;
  std::size_t n_rows = 0;
  std::vector<std::size_t> alphabet_sizes;  // sources first, target last
  std::string unit = "bits";                // "bits" or "nats"
  double threshold_bits = kDefaultIllDefinedThreshold;
  std::string tool_version;
  InvariantReport invariants;
};

std::string to_json(const ReportDocument& doc);
std::string to_tsv(const ReportDocument& doc);

}  // namespace shinv
