#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ehlab/colouring.hpp"

namespace ehlab {

// Colour-preserving injection of pattern vertices into host vertices:
// host(map[x], map[y]) == pattern(x, y) for all x < y.
struct Embedding {
  std::vector<int> map;

  bool operator==(const Embedding&) const = default;
};

// First embedding in depth-first order (pattern vertices in order, host
// candidates ascending), or nullopt when the host is pattern-free.
std::optional<Embedding> find_copy(const Colouring& host, const Pattern& pattern);

bool is_free(const Colouring& host, const Pattern& pattern);

// Number of k-subsets of the host that induce a copy of the pattern.
std::int64_t count_copies(const Colouring& host, const Pattern& pattern, int workers = 1);

// Number of colour-preserving automorphisms of the pattern.
std::int64_t automorphism_count(const Pattern& pattern);

bool is_embedding(const Colouring& host, const Pattern& pattern, const Embedding& e);

// Lexicographically first k-subset whose edge-colour histogram is exactly the
// palette: t_i edges of colour i for i <= s', none of any other colour.
std::optional<std::vector<int>> find_palette_copy(const Colouring& host, const Palette& palette);

}  // namespace ehlab
