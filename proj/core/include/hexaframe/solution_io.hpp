#pragma once

#include <string>
#include <string_view>

#include "hexaframe/frame.hpp"

namespace hexaframe {

// Solution document:
//   { "n": N, "model": "<faces>",
//     "placements": [ { "slot": {"kind": "corner"|"edge", "index": i, "offset": o},
//                       "variety": "<faces>", "rotation": [p0..p5] } ] }
// rotation[p] is the face position the canonical cube's face p is turned to.
std::string solution_to_json(const FrameSolution& sol, int indent = 2);

/// Throws std::invalid_argument on a malformed document.
FrameSolution solution_from_json(std::string_view text);

/// One line per slot with the oriented faces; exposed faces are starred.
std::string solution_to_text(const FrameSolution& sol);

}  // namespace hexaframe
