#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stdual/verify.hpp"

namespace stdual {

enum class Format { table, machine };

Format parse_format(const std::string& name);
const char* version();

// Machine documents are YAML with schema "stdual-report/1". Exact values
// are written as rationals "a/b" and cyclotomic numbers as
// {conductor: m, terms: [[k, "c"], ...]} meaning sum of c * zeta_m^k.
std::string render_info(const Scenario& s, LeviFamily family, Format f);
std::string render_chartable(const Scenario& s, Format f);
std::string render_dual(const Scenario& s, LeviFamily family, Format f);
std::string render_steinberg(const Scenario& s, LeviFamily family, Format f);
std::string render_report(const Scenario& s, const DualityReport& r, Format f);
std::string render_scan(const std::vector<DualityReport>& reports, std::optional<LeviFamily> family, Format f);

}  // namespace stdual
