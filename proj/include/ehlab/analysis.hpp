#pragma once

#include <cstdint>

namespace ehlab {

// All logarithms are base 2. Bounds are carried as log2 values so that
// instances up to n = 2^60 neither overflow nor underflow.

struct TuranBound {
  std::int64_t q = 0;
  std::int64_t alpha = 0;
  // Minimum edge count of a q-vertex graph with independence number <= alpha
  // (complement of the Turan graph: alpha near-equal cliques).
  std::int64_t exact = 0;
  // ceil(C(q,2) / alpha).
  std::int64_t binomial_over_alpha = 0;
  // q^2 / (4 alpha).
  double quarter_form = 0.0;
};

TuranBound turan_min_edges(std::int64_t q, std::int64_t alpha);

struct RecolourBound {
  long double n = 0, h = 0, xi = 0;
  long double set_size = 0;    // h^(1+xi)
  long double forced = 0;      // x = h^(1+2 xi)
  long double log2_bound = 0;  // h^(1+xi) log n - h^(1+2 xi)
  long double bite_threshold = 0;  // (log n)^(2/xi)
  bool bite_regime = false;    // h > bite_threshold
  bool vacuous = true;         // bound >= 1

  double bound() const;
};

RecolourBound recolour_failure_bound(long double n, long double h, long double xi);

// Smallest integer h >= 1 for which the recolouring bound drops below 1.
std::int64_t recolour_threshold(long double n, long double xi);

struct ConstructionBound {
  long double n = 0, alpha_h = 0;
  long double q = 0;            // 8 alpha(H) log n
  long double edges = 0;        // e_X >= q^2 / (4 alpha(H))
  long double log2_p_x = 0;     // log2(2 * 2^-e_X)
  long double log2_bound = 0;   // q log n + log2 p_X
  long double log2_bound_closed = 0;  // 1 - 8 alpha(H) log^2 n
  bool vacuous = true;

  double bound() const;
};

ConstructionBound construction_failure_bound(long double n, long double alpha_h);

}  // namespace ehlab
