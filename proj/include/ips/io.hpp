#pragma once

// Point-set text files.
//
//   # comment
//   format_version 1
//   name char385
//   source <free text>
//   note <free text>          (any number)
//   q 385
//   denom 2
//   points 16
//   -2189 0
//   ...
//
// Point lines may also be written "(a ; b)" or "(a, b)". Output always uses
// the plain "a b" form, in normalized point order, so a parsed file
// re-serializes byte for byte.

#include <optional>
#include <string>
#include <vector>

#include "ips/point_set.hpp"

namespace ips {

inline constexpr int kFormatVersion = 1;

struct PointSetFile {
  int format_version = kFormatVersion;
  std::optional<std::string> name;
  std::optional<std::string> source;
  std::vector<std::string> notes;
  GridPointSet set;

  friend bool operator==(const PointSetFile&, const PointSetFile&) = default;
};

/// Throws IpsError(Parse) with a line number on malformed input.
PointSetFile parse_point_set(const std::string& text);
std::string serialize_point_set(const PointSetFile& file);

PointSetFile read_point_set_file(const std::string& path);
void write_point_set_file(const std::string& path, const PointSetFile& file);

}  // namespace ips
