#pragma once

#include <string>
#include <vector>

#include "twoended/layered_spec.hpp"

namespace twoended {

// 2-way infinite path: m = 1, one cross rule.
LayeredSpec path_spec();

// 2-way infinite ladder: two rails plus rungs.
LayeredSpec ladder_spec();

std::vector<std::string> builtin_spec_names();

// "path" | "ladder" | "gamma", otherwise treated as a JSON file path.
LayeredSpec spec_by_name_or_file(const std::string& name_or_path);

}  // namespace twoended
