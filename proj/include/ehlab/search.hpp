#pragma once

#include <cstdint>
#include <optional>

#include "ehlab/colouring.hpp"

namespace ehlab {

inline constexpr int kMaxSearchVertices = 10;
inline constexpr int kMaxSearchPatternVertices = 6;
inline constexpr int kMaxSearchPalette = 15;

struct SearchOptions {
  // Cap on extension candidates examined (all levels together).
  std::uint64_t max_leaves = 1'000'000'000;
  int workers = 1;
};

struct SearchStats {
  std::uint64_t candidates = 0;      // full vertex extensions generated
  std::uint64_t pattern_pruned = 0;  // partial extensions closing a pattern copy
  std::uint64_t bound_pruned = 0;    // extensions whose h already exceeds the incumbent
  std::uint64_t noncanonical = 0;
  std::uint64_t canonical = 0;       // isomorphism classes visited
  std::uint64_t complete = 0;        // pattern-free colourings of K_n reached
  std::uint64_t tasks = 0;
  double wall_seconds = 0.0;

  SearchStats& operator+=(const SearchStats& o);
};

struct SearchResult {
  int n = 0;
  int s = 0;
  Pattern pattern = Pattern::monochromatic(2, 1, 1);
  // Exact h_s(n, pattern); empty when no pattern-free s-colouring of K_n exists.
  std::optional<int> value;
  // Canonical representative with the smallest canonical string among optima.
  std::optional<Colouring> witness;
  SearchStats stats;
};

// Exact h_s(n, pattern) by orderly (canonical augmentation) generation of
// pattern-free colourings, vertex by vertex, with branch and bound on h.
// Throws CapExceeded when the instance exceeds the size limits or max_leaves.
SearchResult exact_h(int n, int s, const Pattern& pattern, const SearchOptions& options = {});

struct MinimizeOptions {
  std::uint64_t budget = 100'000;  // proposed moves per chain
  std::uint64_t seed = 0;
  int chains = 1;
  int workers = 1;
  double t_start = 1.0;
  double t_end = 0.02;
};

struct MinimizeResult {
  Colouring colouring;
  int value = 0;         // h of `colouring`: an upper bound on h_s(n, pattern)
  int used_colours = 0;
  int chain = 0;
  std::uint64_t moves = 0;
  std::uint64_t accepted = 0;
  std::uint64_t pattern_rejected = 0;
};

// Simulated annealing over pattern-free colourings with single-edge recolour
// moves. Starts from a seeded random colouring repaired by backtracking.
MinimizeResult minimize_h(int n, int s, const Pattern& pattern, const MinimizeOptions& options);

struct MonotoneReport {
  int n = 0;
  int s = 0;
  SearchResult lower;  // palette s
  SearchResult upper;  // palette s + 1
  bool hypothesis_met = false;  // s exceeds the number of colours the pattern uses
  bool holds = false;           // h_{s+1}(n, c) >= h_s(n, c)
};

MonotoneReport verify_monotone(int n, const Pattern& pattern, int s, const SearchOptions& options = {});

struct SqrtBoundReport {
  int n = 0;
  SearchResult result;
  int ceil_sqrt = 0;
  bool holds = false;
};

int ceil_sqrt(int n);

// Exhaustive check of h_3(n, c) >= ceil(sqrt(n)) for c the triangle coloured 1, 1, 2.
SqrtBoundReport sqrt_bound_check(int n, const SearchOptions& options = {});

}  // namespace ehlab
