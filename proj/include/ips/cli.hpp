#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure or
// nothing found below the ceiling, 2 usage, parse or input error.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ips/point_set.hpp"
#include "ips/search.hpp"

namespace ips::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json report_to_json(const VerificationReport& rep, const GridPointSet& set);
std::string report_to_text(const VerificationReport& rep, const GridPointSet& set);

nlohmann::json stats_to_json(const SearchStats& s);

}  // namespace ips::cli
