#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace ghsurf::cli {

/// Exit codes: 0 success, 1 input validation failure, 2 internal
/// consistency failure.
struct Response {
  nlohmann::json payload;  // {"command", "input", "result", "citations"} or {"error", ...}
  std::string table;       // human-readable rendering
  int exit_code = 0;
};

/// Dispatches one request, given as a JSON object with a "command" field
/// and command-specific integer parameters. Never throws; failures are
/// encoded in the response.
Response run(const nlohmann::json& request);

/// JSON-lines batch: one response line per request line, order preserving;
/// malformed lines yield error records without aborting the stream.
int run_batch(std::istream& in, std::ostream& out);

std::string render(const Response&, bool json_mode);

}  // namespace ghsurf::cli
