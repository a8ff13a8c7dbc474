#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ehlab/colouring.hpp"

namespace ehlab {

// Lexicographic product: vertex (i, a) of outer x inner is i * inner.n() + a,
// so blob X_i is the contiguous range [i*y, (i+1)*y). Edges inside a blob
// follow `inner`; edges between blobs X_i, X_j take outer(i, j).
Colouring lex_product(const Colouring& outer, const Colouring& inner);
// Left-nested product of all factors: ((f0 x f1) x f2) x ...
Colouring lex_product(std::span<const Colouring> factors);

// Blob coordinates of a product vertex, outermost factor first.
std::vector<int> product_coordinates(int vertex, std::span<const int> factor_sizes);

Colouring merge_colours(const Colouring& c, int from_colour, int to_colour);

// Palette grows to s + 1; each edge independently takes colour s + 1 with
// probability p, else keeps its colour. One random stream per edge.
Colouring recolour_extra(const Colouring& c, double p, std::uint64_t seed);

// Uniform i.i.d. edge colours from `colours` over palette [s].
Colouring random_colouring(int n, int s, std::span<const int> colours, std::uint64_t seed);

// h of a colouring measured only over the colours in `colours`.
int restricted_h(const Colouring& c, std::span<const int> colours);

struct GallaiProduct {
  Colouring product;
  // factors[i] colours K_m with [4] - {i+1}.
  std::array<Colouring, 3> factors;
  std::array<int, 3> factor_h;
  std::array<int, 3> factor_trial;
};

// c_1 x (c_2 x c_3) on m^3 vertices, each c_i the best of `trials` random
// 3-colourings of K_m over [4] - {i} (smallest h_3, then smallest trial).
GallaiProduct gallai_product_c4(int m, std::uint64_t seed, int trials, int workers = 1);

// K4-free host H by seeded random greedy edge insertion, H-edges coloured 1 or 2
// with probability 1/2 each, non-edges colour 3. Palette 3.
Colouring k4_free_host_colouring(int n, std::uint64_t seed);
// H recovered from such a colouring (edges of colours 1 and 2).
Graph host_graph(const Colouring& c);

int clique_number(const Graph& g);

}  // namespace ehlab
