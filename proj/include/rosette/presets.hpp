#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rosette/config.hpp"

namespace rosette {

// A named parameter set from the published tables. `printed_radii` and
// `printed_s` keep the values as printed; `config` holds what is actually
// rendered, and `notes` explains any difference.
struct Preset {
    std::string name;
    ConfigDoc config;
    std::string provenance;
    std::string notes;
    std::vector<double> printed_radii;
    int printed_s = 0;
};

// table1-part1, table1-part2, table2-left, table2-right, table3-1..3.
const std::vector<Preset>& list_presets();

// Throws InvalidParameter("preset", ...) for an unknown name.
const Preset& find_preset(std::string_view name);

}  // namespace rosette
