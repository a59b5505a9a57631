#pragma once

#include <optional>
#include <string_view>

namespace w123::fixtures {

// Published equations P_r(x, F) for r = 1..4 and denominator-cleared
// recurrences for r = 1..3, compiled in from data/*.json.
std::optional<std::string_view> equation_json(unsigned r);
std::optional<std::string_view> recurrence_json(unsigned r);

}  // namespace w123::fixtures
