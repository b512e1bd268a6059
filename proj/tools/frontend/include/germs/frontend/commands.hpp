#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "germs/blowup.hpp"
#include "germs/groups.hpp"

namespace germs::frontend {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kDiagnostic = 1, kResourceCap = 2 };

struct RunConfig {
  int trunc = kDefaultTrunc;
  int depth = kDefaultDepth;
  int ball = 3;
  int jet = 3;
  std::string method = "order";  // order | noether | both
  ResourceCaps caps;
  int series_levels = 2;
  std::size_t sample = 24;
  std::optional<TangentDirection> dir;
};

struct CommandResult {
  Json output;
  int exit_code = kOk;
};

/// Commands accepted by run_command, in help order.
const std::vector<std::string>& command_names();

/// Runs one command on textual operands. Library errors become
/// {"error": {"kind": ..., "message": ...}} with exit code 1.
CommandResult run_command(const std::string& name, const std::vector<std::string>& operands, const RunConfig& cfg);

/// "words=N,seconds=S[,threads=T]"; throws ParseError.
ResourceCaps parse_caps(const std::string& text);
/// "a:b" with a, b scalar expressions; throws ParseError.
TangentDirection parse_direction(const std::string& text);

Json to_json(const OrderResult& o);

/// Two-column "key  value" rendering of a result; arrays of objects become
/// indented rows.
std::string render_table(const Json& j);

}  // namespace germs::frontend
