#pragma once

#include <string>
#include <vector>

#include "ulam/stats.hpp"
#include "ulam/ulam2d.hpp"

namespace ulam {

// Self-contained bar chart of the residue histogram, with the third marks.
std::string histogram_svg(const Histogram& h, int width = 720, int height = 360);

// Scatter plot of lattice points within the norm ball.
std::string scatter_svg(const std::vector<Vec2>& points, int norm_bound,
                        int width = 720);

}  // namespace ulam
