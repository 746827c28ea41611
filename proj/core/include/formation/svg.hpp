#pragma once

#include "formation/scheduler.hpp"

#include <string>
#include <vector>

namespace formation {

// One self-contained SVG document per time step t = 0..makespan: graph edges
// and vertices, goal squares, start rings, and numbered agent discs at their
// positions (labels are 1-based like the text reports). Layout comes from
// the instance coordinates; throws std::invalid_argument without them.
std::vector<std::string> render_svg_frames(const Instance& inst, const Schedule& s);

} // namespace formation
