#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quadlab/tournament.hpp"

namespace quadlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kHolds = 0,     // property holds / found
  kFails = 1,     // property fails / nothing found / verifier disagreement
  kUsage = 2,     // bad arguments, parse error, size limit
};

/// Runs the quadlab command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"n": n, "adjacency": [[0,1,...], ...]}; row u column v is 1 iff u -> v.
Json adjacency_json(const Tournament& t);
Tournament tournament_from_json(const Json& j);

/// Matrix file or JSON adjacency, chosen by the first non-blank character.
Tournament parse_tournament_text(std::string_view text);

/// Drops the "volatile" member so reports can be compared byte for byte.
Json strip_volatile(Json report);

}  // namespace quadlab::cli
