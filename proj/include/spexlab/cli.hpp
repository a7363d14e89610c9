#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "spexlab/extremal.hpp"

namespace spexlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the spexlab tool. `args` excludes the program name. Data
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

nlohmann::json report_json(const ExtremalReport& r);
std::string report_table(const ExtremalReport& r);
/// One row per argmax graph.
std::string report_csv(const ExtremalReport& r);

} // namespace spexlab
