#include "ehlab/construct.hpp"

#include <algorithm>
#include <stdexcept>

#include "ehlab/detail/parallel.hpp"
#include "ehlab/detect.hpp"
#include "ehlab/homog.hpp"
#include "ehlab/rng.hpp"

namespace ehlab {

namespace {

// Random stream identifiers.
constexpr std::uint64_t kStreamColour = 1;
constexpr std::uint64_t kStreamRecolour = 2;
constexpr std::uint64_t kStreamHostOrder = 3;
constexpr std::uint64_t kStreamHostSplit = 4;
constexpr std::uint64_t kStreamGallai = 5;

std::uint64_t row_major_index(int n, int u, int v) {
  // Pairs before row u: u*n - u(u+1)/2.
  return static_cast<std::uint64_t>(u) * n - static_cast<std::uint64_t>(u) * (u + 1) / 2 +
         static_cast<std::uint64_t>(v - u - 1);
}

}  // namespace

Colouring lex_product(const Colouring& outer, const Colouring& inner) {
  if (outer.s() != inner.s())
    throw std::invalid_argument("lex_product: palette sizes differ (" + std::to_string(outer.s()) + " vs " +
                                std::to_string(inner.s()) + ")");
  const long total = static_cast<long>(outer.n()) * inner.n();
  if (total > 1 << 16) throw std::invalid_argument("lex_product: product too large");
  const int y = inner.n();
  return Colouring::generate(static_cast<int>(total), outer.s(), [&](int a, int b) {
    const int ia = a / y, ib = b / y;
    return ia == ib ? inner.at(a % y, b % y) : outer.at(ia, ib);
  });
}

Colouring lex_product(std::span<const Colouring> factors) {
  if (factors.empty()) throw std::invalid_argument("lex_product: no factors");
  Colouring out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) out = lex_product(out, factors[i]);
  return out;
}

std::vector<int> product_coordinates(int vertex, std::span<const int> factor_sizes) {
  std::vector<int> coords(factor_sizes.size());
  for (std::size_t i = factor_sizes.size(); i-- > 0;) {
    coords[i] = vertex % factor_sizes[i];
    vertex /= factor_sizes[i];
  }
  return coords;
}

Colouring merge_colours(const Colouring& c, int from_colour, int to_colour) {
  if (from_colour < 1 || from_colour > c.s() || to_colour < 1 || to_colour > c.s())
    throw std::invalid_argument("merge_colours: colour out of range");
  if (from_colour == to_colour) throw std::invalid_argument("merge_colours: colours must differ");
  return Colouring::generate(c.n(), c.s(), [&](int u, int v) {
    const int col = c.at(u, v);
    return col == from_colour ? to_colour : col;
  });
}

Colouring recolour_extra(const Colouring& c, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("recolour_extra: p must lie in [0, 1]");
  const int extra = c.s() + 1;
  return Colouring::generate(c.n(), extra, [&](int u, int v) {
    const double r = stream_unit(seed, kStreamRecolour, row_major_index(c.n(), u, v));
    return r < p ? extra : c.at(u, v);
  });
}

Colouring random_colouring(int n, int s, std::span<const int> colours, std::uint64_t seed) {
  if (colours.empty()) throw std::invalid_argument("random_colouring: empty colour list");
  for (int col : colours)
    if (col < 1 || col > s) throw std::invalid_argument("random_colouring: colour outside palette");
  return Colouring::generate(n, s, [&](int u, int v) {
    return colours[stream_below(seed, kStreamColour, row_major_index(n, u, v), colours.size())];
  });
}

int restricted_h(const Colouring& c, std::span<const int> colours) {
  int best = 0;
  for (int col : colours) best = std::max(best, alpha(colour_class(c, col)).size);
  return best;
}

GallaiProduct gallai_product_c4(int m, std::uint64_t seed, int trials, int workers) {
  if (m < 2) throw std::invalid_argument("gallai_product_c4: blob size must be at least 2");
  if (trials < 1) throw std::invalid_argument("gallai_product_c4: need at least one trial");
  std::vector<Colouring> factors;
  std::array<int, 3> factor_h{};
  std::array<int, 3> factor_trial{};
  for (int i = 1; i <= 3; ++i) {
    std::vector<int> colours;
    for (int col = 1; col <= 4; ++col)
      if (col != i) colours.push_back(col);
    std::vector<int> h(static_cast<std::size_t>(trials));
    auto trial_seed = [&](int t) { return stream_value(seed, kStreamGallai, static_cast<std::uint64_t>(i) * 1000003ULL + t); };
    detail::parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t t) {
      h[t] = restricted_h(random_colouring(m, 4, colours, trial_seed(static_cast<int>(t))), colours);
    });
    const auto best = std::min_element(h.begin(), h.end()) - h.begin();
    factors.push_back(random_colouring(m, 4, colours, trial_seed(static_cast<int>(best))));
    factor_h[i - 1] = h[best];
    factor_trial[i - 1] = static_cast<int>(best);
  }
  Colouring product = lex_product(factors[0], lex_product(factors[1], factors[2]));
  static const Colouring rainbow(3, 3, {1, 2, 3});
  if (!is_free(product, rainbow.with_palette(4)))
    throw std::logic_error("gallai_product_c4: product contains a rainbow triangle");
  return GallaiProduct{std::move(product), {factors[0], factors[1], factors[2]}, factor_h, factor_trial};
}

Colouring k4_free_host_colouring(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("k4_free_host_colouring: n must be at least 4");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  SplitMix64 rng(stream_value(seed, kStreamHostOrder, 0));
  shuffle(std::span(pairs), rng);

  Graph h(n);
  const int W = h.words();
  std::vector<Word> common(static_cast<std::size_t>(W));
  for (auto [u, v] : pairs) {
    const auto nu = h.row(u);
    const auto nv = h.row(v);
    for (int w = 0; w < W; ++w) common[w] = nu[w] & nv[w];
    bool closes_k4 = false;
    for (int x = bits::first(common); x >= 0 && !closes_k4; x = bits::first(common)) {
      bits::reset(common, x);
      const auto nx = h.row(x);
      for (int w = 0; w < W; ++w)
        if (common[w] & nx[w]) {
          closes_k4 = true;
          break;
        }
    }
    if (!closes_k4) h.add_edge(u, v);
  }

  return Colouring::generate(n, 3, [&](int u, int v) {
    if (!h.has_edge(u, v)) return 3;
    return stream_unit(seed, kStreamHostSplit, row_major_index(n, u, v)) < 0.5 ? 1 : 2;
  });
}

Graph host_graph(const Colouring& c) {
  Graph g(c.n());
  for (int u = 0; u < c.n(); ++u)
    for (int v = u + 1; v < c.n(); ++v)
      if (c.at(u, v) == 1 || c.at(u, v) == 2) g.add_edge(u, v);
  return g;
}

int clique_number(const Graph& g) { return max_independent_set(g.complement()).size; }

}  // namespace ehlab
