#pragma once

#include <json.hpp>
#include <string>

#include "monoloc/monoid.hpp"
#include "monoloc/rational.hpp"

namespace monoloc::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { exit_pass = 0, exit_refuted = 1, exit_refused = 2, exit_input = 3, exit_resource = 4 };

struct CommandResult {
  Json report;
  int exit_code = exit_pass;
};

Json json_of(const Rational& q);
Json json_of(const RatVector& v);
Json json_of(const IntVector& v);

/// Indented "key: value" rendering; arrays of scalars stay on one line.
std::string render_text(const Json& report);
std::string render(const Json& report, const std::string& format);

}  // namespace monoloc::cli
