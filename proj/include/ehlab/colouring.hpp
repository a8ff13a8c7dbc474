#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ehlab/graph.hpp"

namespace ehlab {

// Vertices are 0-based in the library API; colours are 1-based (1..s).
// Text formats and CLI output use 1-based vertices.

inline constexpr int kMaxPalette = 255;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance too large for an exact routine (canonicalization, enumeration).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline long pair_count(long n) { return n * (n - 1) / 2; }

// An s-edge-colouring of K_n. Immutable once built.
class Colouring {
 public:
  // `row_major` lists the colours of (0,1),(0,2),...,(0,n-1),(1,2),...
  Colouring(int n, int s, std::span<const int> row_major);
  Colouring(int n, int s, std::initializer_list<int> row_major)
      : Colouring(n, s, std::span<const int>(row_major.begin(), row_major.size())) {}

  static Colouring monochromatic(int n, int s, int colour);

  // Builds a colouring from `colour_fn(u, v)` evaluated once for every u < v.
  template <class F>
  static Colouring generate(int n, int s, F&& colour_fn) {
    Colouring c(n, s);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) c.put(u, v, colour_fn(u, v));
    return c;
  }

  int n() const { return n_; }
  int s() const { return s_; }

  // Checked access; throws std::out_of_range for u == v or vertices outside [0, n).
  int colour(int u, int v) const;
  // Unchecked access; diagonal reads as 0.
  int at(int u, int v) const { return m_[static_cast<std::size_t>(u) * n_ + v]; }

  std::vector<int> row_major() const;
  // Number of edges of each colour; index 0 unused.
  std::vector<long> histogram() const;

  // Colouring induced on `vertices`, relabelled 0..k-1 in the given order.
  Colouring restrict_to(std::span<const int> vertices) const;
  // Colouring d with d(perm[x], perm[y]) = c(x, y).
  Colouring relabel(std::span<const int> perm) const;
  // Same edges, larger palette.
  Colouring with_palette(int s) const;

  bool operator==(const Colouring&) const = default;

 private:
  Colouring(int n, int s);
  void put(int u, int v, int colour);

  int n_ = 0;
  int s_ = 0;
  std::vector<std::uint8_t> m_;
};

// A small colouring used as a forbidden pattern (k >= 2 vertices).
using Pattern = Colouring;

void require_pattern(const Pattern& p);

// One colour's graph G_i.
struct ColourClass {
  int colour = 0;
  Graph graph;
};

std::vector<ColourClass> colour_classes(const Colouring& c);
ColourClass colour_class(const Colouring& c, int colour);
int used_colours(const Colouring& c);

// Prescribed colour histogram (t_1..t_s') on a k-clique.
struct Palette {
  int k = 0;
  std::vector<int> counts;

  Palette(int k, std::vector<int> counts);
};

inline constexpr int kDefaultCanonicalCap = 10;

// Lexicographically smallest colex edge string over all vertex relabellings,
// prefixed by n and s. Colours are never permuted.
std::string canonical_form(const Colouring& c, int max_n = kDefaultCanonicalCap);
// Relabelling of `c` whose colex edge string is the canonical one.
Colouring canonical_relabel(const Colouring& c, int max_n = kDefaultCanonicalCap);
bool are_isomorphic(const Colouring& a, const Colouring& b, int max_n = kDefaultCanonicalCap);

// "ehc v1" text format.
std::string to_ehc(const Colouring& c);
Colouring parse_ehc(std::string_view text);
Colouring read_ehc_file(const std::filesystem::path& path);
void write_ehc_file(const std::filesystem::path& path, const Colouring& c);

}  // namespace ehlab
