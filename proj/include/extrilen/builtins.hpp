#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "extrilen/instance.hpp"

namespace extrilen {

/// Names accepted by builtin_instance: a2_mod, a3_mod, a3_theta, empty.
std::vector<std::string> builtin_names();

/// Instance file text of a built-in. Throws std::invalid_argument for an
/// unknown name.
std::string_view builtin_text(std::string_view name);

Instance builtin_instance(std::string_view name);

}  // namespace extrilen
