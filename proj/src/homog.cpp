#include "ehlab/homog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ehlab {

namespace {

using Bits = std::vector<Word>;

// Maximum clique in the complement of g by bitset branch and bound with a
// greedy colouring bound (a greedy clique cover of g). Vertices are renumbered
// by decreasing complement degree.
class CliqueSolver {
 public:
  explicit CliqueSolver(const Graph& g) : n_(g.n()), words_(words_for(g.n())) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<int> deg(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) deg[v] = n_ - 1 - g.degree(v);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && !g.has_edge(order_[i], order_[j])) bits::set(row(i), j);
  }

  // Starts from a known independent set (in original labels) as incumbent.
  std::vector<int> solve(const std::vector<int>& incumbent) {
    best_.clear();
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
    for (int v : incumbent) best_.push_back(pos[v]);
    if (n_ == 0) return {};
    Bits all = bits::full(n_);
    current_.clear();
    expand(0, all);
    std::vector<int> out;
    for (int i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::span<Word> row(int v) { return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)}; }
  std::span<const Word> crow(int v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  struct Level {
    Bits scratch, uncoloured, next;
    std::vector<int> vertex, bound;
  };

  Level& level(int depth) {
    while (static_cast<int>(levels_.size()) <= depth) {
      Level l;
      l.scratch.assign(static_cast<std::size_t>(words_), 0);
      l.uncoloured.assign(static_cast<std::size_t>(words_), 0);
      l.next.assign(static_cast<std::size_t>(words_), 0);
      levels_.push_back(std::move(l));
    }
    return levels_[static_cast<std::size_t>(depth)];
  }

  void colour_sort(Level& lv, const Bits& candidates) {
    lv.vertex.clear();
    lv.bound.clear();
    lv.uncoloured = candidates;
    int k = 0;
    while (!bits::none(lv.uncoloured)) {
      ++k;
      lv.scratch = lv.uncoloured;
      for (int w = 0; w < words_; ++w) {
        while (lv.scratch[w]) {
          const int v = w * 64 + std::countr_zero(lv.scratch[w]);
          lv.scratch[w] &= lv.scratch[w] - 1;
          const auto nb = crow(v);
          for (int x = w; x < words_; ++x) lv.scratch[x] &= ~nb[x];
          bits::reset(lv.uncoloured, v);
          lv.vertex.push_back(v);
          lv.bound.push_back(k);
        }
      }
    }
  }

  void expand(int depth, Bits candidates) {
    Level& lv = level(depth);
    colour_sort(lv, candidates);
    // `lv` may be invalidated by deeper levels growing `levels_`; copy what we need.
    const std::vector<int> vertex = lv.vertex;
    const std::vector<int> bound = lv.bound;
    for (int i = static_cast<int>(vertex.size()) - 1; i >= 0; --i) {
      if (static_cast<int>(current_.size()) + bound[i] <= static_cast<int>(best_.size())) return;
      const int v = vertex[i];
      current_.push_back(v);
      Bits next(static_cast<std::size_t>(words_));
      const auto nb = crow(v);
      for (int w = 0; w < words_; ++w) next[w] = candidates[w] & nb[w];
      if (bits::none(next)) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(depth + 1, std::move(next));
      }
      current_.pop_back();
      bits::reset(candidates, v);
    }
  }

  int n_;
  int words_;
  std::vector<int> order_;
  std::vector<Word> adj_;
  std::vector<Level> levels_;
  std::vector<int> current_;
  std::vector<int> best_;
};

std::vector<int> greedy_independent_set(const Graph& g) {
  Bits alive = bits::full(g.n());
  std::vector<int> out;
  while (!bits::none(alive)) {
    int pick = -1, best_deg = 0;
    for (int v = 0; v < g.n(); ++v) {
      if (!bits::test(alive, v)) continue;
      int d = 0;
      const auto nb = g.row(v);
      for (int w = 0; w < g.words(); ++w) d += std::popcount(nb[w] & alive[w]);
      if (pick < 0 || d < best_deg) {
        pick = v;
        best_deg = d;
      }
    }
    out.push_back(pick);
    bits::reset(alive, pick);
    const auto nb = g.row(pick);
    for (int w = 0; w < g.words(); ++w) alive[w] &= ~nb[w];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Depth-first search over independent sets in lexicographic order, returning
// the first one of size `target`.
class LexFirst {
 public:
  LexFirst(const Graph& g, int target) : g_(g), target_(target), words_(g.words()) {
    non_adj_.assign(static_cast<std::size_t>(g.n()) * words_, 0);
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v)
        if (u != v && !g.has_edge(u, v)) bits::set(nrow(u), v);
  }

  std::vector<int> run() {
    chosen_.clear();
    if (!search(bits::full(g_.n()))) throw std::logic_error("independent set of target size not found");
    return chosen_;
  }

 private:
  std::span<Word> nrow(int v) {
    return {non_adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  // Upper bound on the largest independent set inside `p`: number of greedy
  // clique-cover classes.
  int cover_bound(const Bits& p) {
    Bits left = p, q;
    int k = 0;
    while (!bits::none(left)) {
      ++k;
      q = left;
      while (!bits::none(q)) {
        const int v = bits::first(q);
        bits::reset(q, v);
        bits::reset(left, v);
        const auto nb = nrow(v);
        for (int w = 0; w < words_; ++w) q[w] &= ~nb[w];
      }
    }
    return k;
  }

  bool search(Bits p) {
    if (static_cast<int>(chosen_.size()) == target_) return true;
    while (!bits::none(p)) {
      const int have = static_cast<int>(chosen_.size());
      if (have + bits::count(p) < target_) return false;
      if (have + cover_bound(p) < target_) return false;
      const int v = bits::first(p);
      Bits next(static_cast<std::size_t>(words_));
      const auto nb = nrow(v);
      for (int w = 0; w < words_; ++w) next[w] = p[w] & nb[w];
      chosen_.push_back(v);
      if (search(std::move(next))) return true;
      chosen_.pop_back();
      bits::reset(p, v);
    }
    return false;
  }

  const Graph& g_;
  int target_;
  int words_;
  std::vector<Word> non_adj_;
  std::vector<int> chosen_;
};

Graph outside_colours_graph(const Colouring& c, const std::vector<bool>& inside) {
  Graph g(c.n());
  for (int u = 0; u < c.n(); ++u)
    for (int v = u + 1; v < c.n(); ++v)
      if (!inside[c.at(u, v)]) g.add_edge(u, v);
  return g;
}

ColourSetClique s_clique_unchecked(const Colouring& c, std::vector<int> colours) {
  std::vector<bool> inside(static_cast<std::size_t>(c.s()) + 1, false);
  for (int col : colours) inside[col] = true;
  auto mis = max_independent_set(outside_colours_graph(c, inside));
  return ColourSetClique{std::move(colours), mis.size, std::move(mis.witness)};
}

}  // namespace

IndependentSet max_independent_set(const Graph& g) {
  if (g.n() == 0) return {};
  CliqueSolver solver(g);
  const int size = static_cast<int>(solver.solve(greedy_independent_set(g)).size());
  LexFirst lex(g, size);
  return IndependentSet{size, lex.run()};
}

int independence_number(const Graph& g) {
  if (g.n() == 0) return 0;
  CliqueSolver solver(g);
  return static_cast<int>(solver.solve(greedy_independent_set(g)).size());
}

IndependentSet alpha(const ColourClass& cls) { return max_independent_set(cls.graph); }

HomReport homogeneous_number(const Colouring& c) {
  HomReport r;
  r.alpha_by_colour.assign(static_cast<std::size_t>(c.s()) + 1, 0);
  for (auto& cls : colour_classes(c)) {
    auto a = alpha(cls);
    r.alpha_by_colour[cls.colour] = a.size;
    if (a.size > r.value) {
      r.value = a.size;
      r.witness = std::move(a.witness);
      r.missing_colour = cls.colour;
    }
  }
  return r;
}

ColourSetClique s_clique(const Colouring& c, std::vector<int> colours) {
  if (colours.empty()) throw std::invalid_argument("s_clique: empty colour set");
  for (int col : colours)
    if (col < 1 || col > c.s()) throw std::invalid_argument("s_clique: colour " + std::to_string(col) + " out of range");
  std::sort(colours.begin(), colours.end());
  colours.erase(std::unique(colours.begin(), colours.end()), colours.end());
  return s_clique_unchecked(c, std::move(colours));
}

HomReport h_from_s_cliques(const Colouring& c) {
  HomReport r;
  r.alpha_by_colour.assign(static_cast<std::size_t>(c.s()) + 1, 0);
  for (int missing = 1; missing <= c.s(); ++missing) {
    std::vector<int> rest;
    for (int col = 1; col <= c.s(); ++col)
      if (col != missing) rest.push_back(col);
    auto sc = s_clique_unchecked(c, std::move(rest));
    r.alpha_by_colour[missing] = sc.value;
    if (sc.value > r.value) {
      r.value = sc.value;
      r.witness = std::move(sc.witness);
      r.missing_colour = missing;
    }
  }
  return r;
}

bool is_p4_free(const Graph& g) {
  const int W = g.words();
  Bits a(static_cast<std::size_t>(W)), d(static_cast<std::size_t>(W));
  for (int b = 0; b < g.n(); ++b)
    for (int c = b + 1; c < g.n(); ++c) {
      if (!g.has_edge(b, c)) continue;
      const auto nb = g.row(b);
      const auto nc = g.row(c);
      for (int w = 0; w < W; ++w) {
        a[w] = nb[w] & ~nc[w];
        d[w] = nc[w] & ~nb[w];
      }
      bits::reset(a, c);
      bits::reset(d, b);
      if (bits::none(d)) continue;
      for (int x = bits::first(a); x >= 0; x = bits::first(a)) {
        bits::reset(a, x);
        const auto nx = g.row(x);
        for (int w = 0; w < W; ++w)
          if (d[w] & ~nx[w]) return false;
      }
    }
  return true;
}

namespace {

class CotreeBuilder {
 public:
  explicit CotreeBuilder(const Graph& g) : g_(g), W_(g.words()) {}

  std::optional<Cotree> build() {
    if (g_.n() == 0) return std::nullopt;
    std::vector<int> all(static_cast<std::size_t>(g_.n()));
    std::iota(all.begin(), all.end(), 0);
    const int root = node(all);
    if (root < 0) return std::nullopt;
    tree_.root = root;
    return std::move(tree_);
  }

 private:
  // Connected components of G[vs] (or of its complement), each sorted.
  std::vector<std::vector<int>> components(const std::vector<int>& vs, bool complement) const {
    Bits left(static_cast<std::size_t>(W_), 0);
    for (int v : vs) bits::set(left, v);
    const Bits within = left;
    std::vector<std::vector<int>> out;
    while (!bits::none(left)) {
      std::vector<int> comp;
      std::vector<int> stack{bits::first(left)};
      bits::reset(left, stack.back());
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        const auto nb = g_.row(v);
        for (int w = 0; w < W_; ++w) {
          Word next = left[w] & (complement ? (within[w] & ~nb[w]) : nb[w]);
          while (next) {
            const int x = w * 64 + std::countr_zero(next);
            next &= next - 1;
            if (x == v) continue;
            bits::reset(left, x);
            stack.push_back(x);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  int node(const std::vector<int>& vs) {
    if (vs.size() == 1) {
      tree_.nodes.push_back({Cotree::Kind::Leaf, vs[0], {}});
      return static_cast<int>(tree_.nodes.size()) - 1;
    }
    auto parts = components(vs, false);
    Cotree::Kind kind = Cotree::Kind::Union;
    if (parts.size() == 1) {
      parts = components(vs, true);
      kind = Cotree::Kind::Join;
      if (parts.size() == 1) return -1;
    }
    std::vector<int> children;
    for (const auto& part : parts) {
      const int child = node(part);
      if (child < 0) return -1;
      children.push_back(child);
    }
    tree_.nodes.push_back({kind, -1, std::move(children)});
    return static_cast<int>(tree_.nodes.size()) - 1;
  }

  const Graph& g_;
  int W_;
  Cotree tree_;
};

AlphaOmega evaluate(const Cotree& t, int id) {
  const auto& nd = t.nodes[id];
  if (nd.kind == Cotree::Kind::Leaf) return {1, 1};
  AlphaOmega out{0, 0};
  for (int child : nd.children) {
    const auto sub = evaluate(t, child);
    if (nd.kind == Cotree::Kind::Union) {
      out.alpha += sub.alpha;
      out.omega = std::max(out.omega, sub.omega);
    } else {
      out.alpha = std::max(out.alpha, sub.alpha);
      out.omega += sub.omega;
    }
  }
  return out;
}

}  // namespace

std::optional<Cotree> build_cotree(const Graph& g) { return CotreeBuilder(g).build(); }

AlphaOmega cograph_alpha_omega(const Graph& g) {
  if (g.n() == 0) return {0, 0};
  const auto tree = build_cotree(g);
  if (!tree) throw std::invalid_argument("cograph_alpha_omega: graph contains an induced P4");
  return evaluate(*tree, tree->root);
}

}  // namespace ehlab
