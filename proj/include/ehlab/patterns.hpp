#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ehlab/colouring.hpp"

namespace ehlab {

// The named patterns shipped in patterns/*.ehc:
//   rainbow3  - triangle coloured 1, 2, 3
//   twoone    - triangle with two edges of colour 1 and one of colour 2
//   doubleP4  - K4 whose colour classes 1 and 2 are both P4
//   edge_i    - single edge of colour i (i = 1, 2, 3), palette i
std::vector<std::pair<std::string, Pattern>> bundled_patterns();
std::optional<Pattern> bundled_pattern(std::string_view name);

}  // namespace ehlab
