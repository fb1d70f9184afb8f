#pragma once

#include <iosfwd>
#include <string>

#include "odsup/mc.hpp"

namespace odsup {

// Declarative Monte Carlo grid, loaded from a TOML file:
//
//   seed = 20260201       # master seed
//   kernel = "expneg"     # expneg | invquartic
//   replications = 200    # defaults, overridable per cell
//   B = 300
//   alpha = 0.05
//   p = 5
//
//   [[cell]]
//   model = "MD"
//   n = [400, 800]        # scalars or arrays; arrays expand as a cross product
//   mu = [6e-4, 15e-4]
//
// Supported values: strings, numbers, booleans, single-line arrays of
// numbers. That subset covers the grid format; full TOML is not needed.
struct PowerConfig {
    std::uint64_t seed = 1;
    std::string kernel = "expneg";
    std::vector<CellRequest> cells;
};

PowerConfig parse_power_config(std::istream& in);
PowerConfig load_power_config(const std::string& path);

}  // namespace odsup
