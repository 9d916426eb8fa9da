#pragma once

#include "gaw/table.hpp"

#include <string>
#include <vector>

namespace gaw {

// Named data panels (fig2a ... fig11h). Each returns the panel's data as
// a table with the construction parameters recorded in the notes.
std::vector<std::string> preset_ids();

std::string preset_description(const std::string& id);

// Throws std::invalid_argument for an unknown id.
DataTable run_preset(const std::string& id);

}  // namespace gaw
