#pragma once

// Published integral point sets shipped with the library.

#include <string>
#include <string_view>
#include <vector>

#include "ips/io.hpp"

namespace ips {

struct Dataset {
  std::string name;
  std::string description;
  PointSetFile file;
  /// False when the coordinates are kept exactly as printed and are known
  /// not to verify; see `dataset_status`.
  bool expected_to_verify = true;
};

const std::vector<Dataset>& embedded_datasets();

/// Throws IpsError(NotApplicable) for an unknown name.
const Dataset& find_dataset(std::string_view name);

/// "verified" when the set is integral and its triangles agree on the
/// characteristic, otherwise "unverified-as-transcribed".
std::string dataset_status(const Dataset& ds);

}  // namespace ips
