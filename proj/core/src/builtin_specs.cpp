#include "twoended/builtin_specs.hpp"

#include "twoended/io.hpp"
#include "twoended/symmetry.hpp"

namespace twoended {

LayeredSpec path_spec() {
    LayeredSpec spec;
    spec.layer_size = 1;
    spec.cross.emplace_back(0, 0);
    return spec;
}

LayeredSpec ladder_spec() {
    LayeredSpec spec;
    spec.layer_size = 2;
    spec.intra.emplace_back(0, 1);
    spec.cross.emplace_back(0, 0);
    spec.cross.emplace_back(1, 1);
    return spec;
}

std::vector<std::string> builtin_spec_names() { return {"path", "ladder", "gamma"}; }

LayeredSpec spec_by_name_or_file(const std::string& name_or_path) {
    if (name_or_path == "path") return path_spec();
    if (name_or_path == "ladder") return ladder_spec();
    if (name_or_path == "gamma") return gamma::gamma_spec();
    return load_spec_json(name_or_path);
}

}  // namespace twoended
