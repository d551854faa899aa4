#pragma once

#include <string>
#include <vector>

#include "stdual/rgroup.hpp"

namespace stdual {

// Names of the builtin scenarios, in library order.
const std::vector<std::string>& builtin_names();

// Source document of a builtin; throws InvalidInput for unknown names.
const std::string& builtin_document(const std::string& name);

Scenario builtin(const std::string& name);
std::vector<Scenario> builtin_library();

}  // namespace stdual
