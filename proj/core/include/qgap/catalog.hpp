#pragma once

// Built-in survey configurations for the families reported to obey the
// constant-term rules, at desk or full scale.
//
//   rules1      conductor one       rules2      conductor two
//   rules3      conductor three     deviations  E(N,inf,k)^-a deviation windows

#include <string>
#include <string_view>
#include <vector>

#include "qgap/survey.hpp"

namespace qgap::survey {

std::vector<std::string> builtin_survey_names();
/// Throws Error for an unknown name.
SurveyConfig builtin_survey(std::string_view name, bool full = false);
/// The same config as JSON text (what configs/<name>.json holds at desk scale).
std::string builtin_survey_json(std::string_view name, bool full = false);

}  // namespace qgap::survey
