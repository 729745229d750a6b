#pragma once

#include <string>

#include "hookpoly/partition.hpp"

namespace hookpoly {

// Hook lengths as a right-aligned grid, one diagram row per line.
std::string render_hook_grid(const Partition& lambda);

// Annotated computation for lambda = 5,5,3,3,1: hook grids, the corner-ratio
// equality at row 4, the cancelled quotient and its value at x = 1, corner
// sets, and the corner-sum numerator 17x^2-38x-75.
std::string walkthrough_55331();

}  // namespace hookpoly
