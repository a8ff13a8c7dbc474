#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond the Colouring/Graph containers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "ehlab/colouring.hpp"

namespace oracle {

using ehlab::Colouring;
using ehlab::Graph;

inline Colouring random_colouring(int n, int s, std::mt19937_64& rng, int lo = 1) {
  std::uniform_int_distribution<int> pick(lo, s);
  std::vector<int> e;
  for (int i = 0; i < n * (n - 1) / 2; ++i) e.push_back(pick(rng));
  return Colouring(n, s, e);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::vector<int> bits_of(std::uint32_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

// Lexicographically first injective map pattern -> host (as a tuple), over
// all k-permutations of the host vertices.
inline std::optional<std::vector<int>> first_copy(const Colouring& host, const Colouring& pat) {
  const int n = host.n(), k = pat.n();
  std::vector<int> map(k);
  std::vector<bool> used(n, false);
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == k) {
      for (int x = 0; x < k; ++x)
        for (int y = x + 1; y < k; ++y)
          if (host.colour(map[x], map[y]) != pat.colour(x, y)) return false;
      found = map;
      return true;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      map[depth] = v;
      if (self(self, depth + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

// Number of k-subsets admitting some colour-preserving bijection.
inline long count_copies(const Colouring& host, const Colouring& pat) {
  const int n = host.n(), k = pat.n();
  long total = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> sub = bits_of(mask);
    bool hit = false;
    do {
      bool ok = true;
      for (int x = 0; x < k && ok; ++x)
        for (int y = x + 1; y < k && ok; ++y) ok = host.colour(sub[x], sub[y]) == pat.colour(x, y);
      hit = ok;
    } while (!hit && std::next_permutation(sub.begin(), sub.end()));
    total += hit;
  }
  return total;
}

inline bool is_free(const Colouring& host, const Colouring& pat) { return !first_copy(host, pat); }

// First k-subset (in lexicographic order of sorted tuples) with exactly the
// palette histogram and nothing outside it.
inline std::optional<std::vector<int>> palette_copy(const Colouring& host, int k, const std::vector<int>& t) {
  std::optional<std::vector<int>> best;
  for (std::uint32_t mask = 0; mask < (1u << host.n()); ++mask) {
    if (std::popcount(mask) != k) continue;
    const auto sub = bits_of(mask);
    std::vector<int> hist(host.s() + 1, 0);
    for (int x = 0; x < k; ++x)
      for (int y = x + 1; y < k; ++y) ++hist[host.colour(sub[x], sub[y])];
    bool ok = true;
    for (int c = 1; c <= host.s(); ++c) ok = ok && hist[c] == (c <= static_cast<int>(t.size()) ? t[c - 1] : 0);
    if (ok && (!best || sub < *best)) best = sub;
  }
  return best;
}

// Size and lexicographically smallest maximum independent set, by 2^n scan.
struct Mis {
  int size = 0;
  std::vector<int> witness;
};

inline Mis mis(const Graph& g) {
  const int n = g.n();
  Mis best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int sz = std::popcount(mask);
    if (sz < best.size) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!((mask >> u) & 1)) continue;
      for (int v = u + 1; v < n && ok; ++v)
        if (((mask >> v) & 1) && g.has_edge(u, v)) ok = false;
    }
    if (!ok) continue;
    auto w = bits_of(mask);
    if (sz > best.size || w < best.witness) best = {sz, w};
  }
  return best;
}

inline int clique(const Graph& g) { return mis(g.complement()).size; }

inline Graph colour_graph(const Colouring& c, int colour) {
  Graph g(c.n());
  for (int u = 0; u < c.n(); ++u)
    for (int v = u + 1; v < c.n(); ++v)
      if (c.colour(u, v) == colour) g.add_edge(u, v);
  return g;
}

// h(c) = max_i alpha(G_i), with the smallest maximizing colour.
struct Hom {
  int value = 0;
  int colour = 0;
};

inline Hom homogeneous(const Colouring& c) {
  if (c.n() == 1) return {1, 1};
  Hom h;
  for (int i = 1; i <= c.s(); ++i) {
    const int a = mis(colour_graph(c, i)).size;
    if (a > h.value) h = {a, i};
  }
  return h;
}

// Largest vertex set whose induced edges all have colours in `in_set`.
inline int s_clique(const Colouring& c, const std::vector<int>& in_set) {
  const int n = c.n();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int sz = std::popcount(mask);
    if (sz <= best) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (!((mask >> u) & 1)) continue;
      for (int v = u + 1; v < n && ok; ++v)
        if ((mask >> v) & 1) ok = std::find(in_set.begin(), in_set.end(), c.colour(u, v)) != in_set.end();
    }
    if (ok) best = sz;
  }
  return best;
}

// Minimum h over every pattern-free s-colouring of K_n, no symmetry reduction.
inline std::optional<int> exact_h(int n, int s, const Colouring& pat) {
  const int m = n * (n - 1) / 2;
  std::vector<int> e(m, 1);
  std::optional<int> best;
  while (true) {
    const Colouring c(n, s, e);
    if (oracle::is_free(c, pat)) {
      const int h = homogeneous(c).value;
      if (!best || h < *best) best = h;
    }
    int i = 0;
    while (i < m && e[i] == s) e[i++] = 1;
    if (i == m) break;
    ++e[i];
  }
  return best;
}

// Cograph from random pairwise unions and joins.
inline Graph random_cograph(int n, std::mt19937_64& rng) {
  std::vector<std::vector<int>> parts;
  for (int v = 0; v < n; ++v) parts.push_back({v});
  Graph g(n);
  std::bernoulli_distribution join(0.5);
  while (parts.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    std::size_t a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    if (join(rng))
      for (int u : parts[a])
        for (int v : parts[b]) g.add_edge(u, v);
    parts[a].insert(parts[a].end(), parts[b].begin(), parts[b].end());
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return g;
}

inline int ceil_sqrt(int n) {
  int r = 0;
  while (r * r < n) ++r;
  return r;
}

}  // namespace oracle
