#pragma once

#include <string>
#include <vector>

#include "bjortho/space.hpp"

namespace bjo {

/// Names accepted by catalog_space. regular-polygon-N takes the vertex count N.
std::vector<std::string> catalog_names();

/// Throws PreconditionError for unknown names.
Space catalog_space(const std::string& name);

}  // namespace bjo
