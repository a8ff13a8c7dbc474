#include "ehlab/patterns.hpp"

namespace ehlab {

std::vector<std::pair<std::string, Pattern>> bundled_patterns() {
  std::vector<std::pair<std::string, Pattern>> out;
  out.emplace_back("rainbow3", Pattern(3, 3, {1, 2, 3}));
  out.emplace_back("twoone", Pattern(3, 2, {1, 2, 1}));
  // Path 0-1-2-3 in colour 1; its complement 2-0-3-1 in colour 2.
  out.emplace_back("doubleP4", Pattern(4, 2, {1, 2, 2, 1, 2, 1}));
  for (int i = 1; i <= 3; ++i) out.emplace_back("edge_" + std::to_string(i), Pattern(2, i, {i}));
  return out;
}

std::optional<Pattern> bundled_pattern(std::string_view name) {
  for (auto& [key, p] : bundled_patterns())
    if (key == name) return p;
  return std::nullopt;
}

}  // namespace ehlab
