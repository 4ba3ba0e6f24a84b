#pragma once

// Request/response entry points. Every operation takes a JSON request and
// returns a JSON payload; the CLI and the Python module are thin shells
// around `run`.

#include <string>
#include <vector>

#include "valrank/json_io.hpp"

namespace valrank::api {

struct Response {
  json payload;
  std::vector<std::string> warnings;
};

/// Operation names such as "ring.teich" or "bt.hull".
const std::vector<std::string>& operation_names();

/// One-line description of the request fields each operation expects.
std::string request_schema(const std::string& op);

/// Throws valrank::Error on domain errors and on malformed requests.
Response run(const std::string& op, const json& request);

}  // namespace valrank::api
