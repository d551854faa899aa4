#pragma once

#include <string>
#include <string_view>

#include "stdual/errors.hpp"
#include "stdual/rgroup.hpp"

namespace stdual {

// Syntax or schema error in a scenario document, anchored at a 1-based
// line and column of the source.
class ParseError : public InvalidInput {
 public:
  ParseError(std::string source, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

ScenarioDocument parse_scenario_document(std::string_view text, const std::string& source = "<input>");

// Parses and validates. Validation failures raise ScenarioInconsistency
// listing every violation with its witness.
Scenario parse_scenario(std::string_view text, const std::string& source = "<input>");
Scenario load_scenario(const std::string& path);

// Canonical textual form; parse_scenario_document inverts it exactly.
std::string emit_scenario(const ScenarioDocument& doc);

}  // namespace stdual
