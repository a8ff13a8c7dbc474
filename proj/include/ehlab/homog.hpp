#pragma once

#include <optional>
#include <vector>

#include "ehlab/colouring.hpp"

namespace ehlab {

struct IndependentSet {
  int size = 0;
  std::vector<int> witness;  // sorted ascending
};

// Exact maximum independent set. The witness is the lexicographically
// smallest maximum independent set.
IndependentSet max_independent_set(const Graph& g);
// Size only; skips the lexicographic witness pass.
int independence_number(const Graph& g);
IndependentSet alpha(const ColourClass& cls);

// Largest homogeneous set: an independent set in the colour class attaining
// max_i alpha(G_i), ties to the smallest colour.
struct HomReport {
  int value = 0;
  std::vector<int> witness;
  int missing_colour = 0;
  std::vector<int> alpha_by_colour;  // index 0 unused
};

HomReport homogeneous_number(const Colouring& c);

// Largest vertex set inducing only colours from `colours`.
struct ColourSetClique {
  std::vector<int> colours;  // sorted
  int value = 0;
  std::vector<int> witness;
};

ColourSetClique s_clique(const Colouring& c, std::vector<int> colours);

// Same quantity as homogeneous_number, computed as max S_I over |I| = s - 1.
HomReport h_from_s_cliques(const Colouring& c);

// Cographs (P4-free graphs).
bool is_p4_free(const Graph& g);

struct Cotree {
  enum class Kind { Leaf, Union, Join };
  struct Node {
    Kind kind = Kind::Leaf;
    int vertex = -1;  // leaves only
    std::vector<int> children;
  };
  std::vector<Node> nodes;  // nodes[root] is the root
  int root = -1;
};

// Cotree by recursive splitting into components of the graph or of its
// complement; nullopt when some induced subgraph is connected and co-connected.
std::optional<Cotree> build_cotree(const Graph& g);

struct AlphaOmega {
  int alpha = 0;
  int omega = 0;
};

// Throws std::invalid_argument if `g` is not a cograph.
AlphaOmega cograph_alpha_omega(const Graph& g);

}  // namespace ehlab
