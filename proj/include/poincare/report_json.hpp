#pragma once

#include <string>

#include <json.hpp>

namespace poincare {

using ojson = nlohmann::ordered_json;

// Two-space indented writer with a fixed %.17g number style, so reports are
// byte-stable across platforms regardless of the library's float formatter.
std::string to_json_string(const ojson& v, int indent = 0);

std::string timestamp_iso8601();

}  // namespace poincare
