#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace polycentre::report {

using Json = nlohmann::json;

struct RunOptions {
  std::uint64_t seed = 0;
  int samples = 200;
  std::optional<std::string> point;  // raw "p/q,p/q,..." text
};

/// Exit codes: 0 all contracts hold, 1 a contract was falsified (witness in
/// the document), 2 malformed input or schema violation.
struct RunResult {
  int exit_code;
  Json document;
};

/// Runs one named operation against a parsed space description and builds
/// the report document. Never throws on bad input; that becomes exit 2.
RunResult run_operation(const std::string& operation, const Json& input,
                        const RunOptions& options);

/// Same, parsing the input document from text first.
RunResult run_on_text(const std::string& operation, const std::string& input_text,
                      const RunOptions& options);

const std::vector<std::string>& operation_names();

}  // namespace polycentre::report
