#include "ehlab/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>

#include "ehlab/detail/canon.hpp"
#include "ehlab/detail/parallel.hpp"
#include "ehlab/homog.hpp"
#include "ehlab/rng.hpp"

namespace ehlab {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  candidates += o.candidates;
  pattern_pruned += o.pattern_pruned;
  bound_pruned += o.bound_pruned;
  noncanonical += o.noncanonical;
  canonical += o.canonical;
  complete += o.complete;
  tasks += o.tasks;
  return *this;
}

namespace {

// All colex edge strings of the pattern under vertex reorderings, packed four
// bits per edge. A sorted host k-subset is a copy iff its packed string is listed.
class PatternIndex {
 public:
  explicit PatternIndex(const Pattern& p) : k_(p.n()) {
    std::vector<int> order(static_cast<std::size_t>(k_));
    std::iota(order.begin(), order.end(), 0);
    do {
      keys_.push_back(key([&](int a, int b) { return p.at(order[a], order[b]); }));
    } while (std::next_permutation(order.begin(), order.end()));
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  }

  int k() const { return k_; }

  // colour(a, b) for positions a < b of the sorted subset.
  template <class ColourFn>
  std::uint64_t key(const ColourFn& colour) const {
    std::uint64_t out = 0;
    for (int b = 1; b < k_; ++b)
      for (int a = 0; a < b; ++a) out = (out << 4) | static_cast<std::uint64_t>(colour(a, b));
    return out;
  }

  bool contains(std::uint64_t key) const { return std::binary_search(keys_.begin(), keys_.end(), key); }

 private:
  int k_;
  std::vector<std::uint64_t> keys_;
};

void check_search_pattern(const Pattern& pattern, int s) {
  require_pattern(pattern);
  if (pattern.n() > kMaxSearchPatternVertices)
    throw CapExceeded("search: patterns are limited to " + std::to_string(kMaxSearchPatternVertices) + " vertices");
  if (s > kMaxSearchPalette) throw CapExceeded("search: palettes are limited to " + std::to_string(kMaxSearchPalette) + " colours");
  const auto hist = pattern.histogram();
  for (int col = s + 1; col < static_cast<int>(hist.size()); ++col)
    if (hist[col] > 0) throw std::invalid_argument("search: pattern uses colour " + std::to_string(col) + " outside [s]");
}

// Calls fn(subset) for every r-subset of [0, limit) (ascending order).
template <class Fn>
void for_each_subset(int limit, int r, std::array<int, 8>& buf, int depth, int from, const Fn& fn) {
  if (depth == r) {
    fn();
    return;
  }
  for (int v = from; v <= limit - (r - depth); ++v) {
    buf[depth] = v;
    for_each_subset(limit, r, buf, depth + 1, v + 1, fn);
  }
}

// Independence number of a graph on <= 16 vertices given as bitmask rows.
int small_alpha(std::uint32_t candidates, const std::array<std::uint16_t, 16>& adj) {
  if (!candidates) return 0;
  const int v = std::countr_zero(candidates);
  const std::uint32_t rest = candidates & ~(1U << v);
  if (!(adj[v] & rest)) return 1 + small_alpha(rest, adj);
  const int with = 1 + small_alpha(rest & ~static_cast<std::uint32_t>(adj[v]), adj);
  if (with > std::popcount(rest)) return with;
  return std::max(with, small_alpha(rest, adj));
}

struct Node {
  int m = 0;  // vertices coloured so far
  std::array<std::uint8_t, 45> code{};
};

struct Best {
  int value = 0;
  std::array<std::uint8_t, 45> code{};
  bool found = false;
};

class Enumerator {
 public:
  Enumerator(int n, int s, const PatternIndex& index, std::uint64_t max_leaves, std::atomic<std::uint64_t>& leaves)
      : n_(n), s_(s), index_(index), max_leaves_(max_leaves), leaves_(leaves) {}

  SearchStats stats;
  Best best;

  void set_bound(int bound) { bound_ = bound; }

  // Collects all canonical pattern-free extensions of `node` by one vertex.
  std::vector<Node> children(const Node& node) {
    std::vector<Node> out;
    work_ = node;
    assign(0, [&] { out.push_back(work_); });
    return out;
  }

  // Exhausts the subtree below `node`, updating `best`.
  void explore(const Node& node) {
    if (node.m == n_) {
      record(node);
      return;
    }
    for (const auto& child : children(node)) explore(child);
  }

  // h of the colouring on the first m vertices of `code`.
  int h_of(const std::array<std::uint8_t, 45>& code, int m) const {
    int best = 0;
    const std::uint32_t all = m == 32 ? ~0U : ((1U << m) - 1);
    for (int col = 1; col <= s_; ++col) {
      std::array<std::uint16_t, 16> adj{};
      for (int v = 1; v < m; ++v)
        for (int u = 0; u < v; ++u)
          if (code[detail::colex_index(u, v)] == col) {
            adj[u] |= static_cast<std::uint16_t>(1U << v);
            adj[v] |= static_cast<std::uint16_t>(1U << u);
          }
      best = std::max(best, small_alpha(all, adj));
      if (best == m) break;
    }
    return best;
  }

  void record(const Node& node) {
    ++stats.complete;
    const int h = h_of(node.code, node.m);
    const std::size_t len = static_cast<std::size_t>(pair_count(n_));
    const bool better = !best.found || h < best.value ||
                        (h == best.value && std::lexicographical_compare(node.code.begin(), node.code.begin() + len,
                                                                         best.code.begin(), best.code.begin() + len));
    if (better) {
      best.found = true;
      best.value = h;
      best.code = node.code;
    }
    bound_ = std::min(bound_, best.value);
  }

 private:
  bool closes_copy(int j, int m) const {
    const int k = index_.k();
    if (k == 2) return index_.contains(work_.code[detail::colex_index(j, m)]);
    if (j < k - 2) return false;
    std::array<int, 8> buf{};
    bool found = false;
    for_each_subset(j, k - 2, buf, 0, 0, [&] {
      if (found) return;
      std::array<int, 8> verts{};
      for (int i = 0; i < k - 2; ++i) verts[i] = buf[i];
      verts[k - 2] = j;
      verts[k - 1] = m;
      const auto key = index_.key([&](int a, int b) { return work_.code[detail::colex_index(verts[a], verts[b])]; });
      if (index_.contains(key)) found = true;
    });
    return found;
  }

  template <class Emit>
  void assign(int j, const Emit& emit) {
    const int m = work_.m;
    if (j == m) {
      ++stats.candidates;
      if (leaves_.fetch_add(1, std::memory_order_relaxed) + 1 > max_leaves_)
        throw CapExceeded("exact search: more than " + std::to_string(max_leaves_) + " candidates (max-leaves)");
      if (h_of(work_.code, m + 1) > bound_) {
        ++stats.bound_pruned;
        return;
      }
      if (!is_canonical(m + 1)) {
        ++stats.noncanonical;
        return;
      }
      ++stats.canonical;
      ++work_.m;
      emit();
      --work_.m;
      return;
    }
    const int idx = detail::colex_index(j, m);
    for (int col = 1; col <= s_; ++col) {
      work_.code[idx] = static_cast<std::uint8_t>(col);
      if (m + 1 >= index_.k() && closes_copy(j, m)) {
        ++stats.pattern_pruned;
        continue;
      }
      assign(j + 1, emit);
    }
    work_.code[idx] = 0;
  }

  bool is_canonical(int m) const {
    const auto colour = [this](int u, int v) {
      return u < v ? work_.code[detail::colex_index(u, v)] : work_.code[detail::colex_index(v, u)];
    };
    std::vector<std::uint8_t> identity(work_.code.begin(), work_.code.begin() + pair_count(m));
    detail::LexMinSearch<decltype(colour)> search(m, colour);
    return search.identity_is_minimal(identity);
  }

  int n_;
  int s_;
  const PatternIndex& index_;
  std::uint64_t max_leaves_;
  std::atomic<std::uint64_t>& leaves_;
  int bound_ = 1 << 20;
  Node work_;
};

Colouring from_colex(int n, int s, const std::array<std::uint8_t, 45>& code) {
  return Colouring::generate(n, s, [&](int u, int v) { return code[detail::colex_index(u, v)]; });
}

constexpr std::size_t kTargetTasks = 64;

}  // namespace

SearchResult exact_h(int n, int s, const Pattern& pattern, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 1) throw std::invalid_argument("exact_h: n must be positive");
  if (s < 1) throw std::invalid_argument("exact_h: s must be positive");
  if (n > kMaxSearchVertices)
    throw CapExceeded("exact_h: n = " + std::to_string(n) + " exceeds the exact cap of " +
                      std::to_string(kMaxSearchVertices));
  check_search_pattern(pattern, s);

  const PatternIndex index(pattern);
  std::atomic<std::uint64_t> leaves{0};
  SearchResult result;
  result.n = n;
  result.s = s;
  result.pattern = pattern;

  // Split the tree at the first level with enough canonical nodes. The split
  // depends only on the instance, never on the worker count.
  Enumerator splitter(n, s, index, options.max_leaves, leaves);
  std::vector<Node> frontier{Node{1, {}}};
  while (!frontier.empty() && frontier.front().m < n && frontier.size() < kTargetTasks) {
    std::vector<Node> next;
    for (const auto& node : frontier) {
      auto kids = splitter.children(node);
      next.insert(next.end(), kids.begin(), kids.end());
    }
    frontier = std::move(next);
  }
  SearchStats total = splitter.stats;

  std::vector<Enumerator> workers;
  workers.reserve(frontier.size());
  for (std::size_t i = 0; i < frontier.size(); ++i) workers.emplace_back(n, s, index, options.max_leaves, leaves);

  if (!frontier.empty()) {
    // The first task runs alone; its optimum seeds the bound of the others.
    workers[0].explore(frontier[0]);
    const int bound = workers[0].best.found ? workers[0].best.value : (1 << 20);
    for (std::size_t i = 1; i < workers.size(); ++i) workers[i].set_bound(bound);
    detail::parallel_for(frontier.size() - 1, options.workers,
                         [&](std::size_t i) { workers[i + 1].explore(frontier[i + 1]); });
  }

  Best best;
  const std::size_t len = static_cast<std::size_t>(pair_count(n));
  for (const auto& w : workers) {
    total += w.stats;
    if (!w.best.found) continue;
    const bool better = !best.found || w.best.value < best.value ||
                        (w.best.value == best.value &&
                         std::lexicographical_compare(w.best.code.begin(), w.best.code.begin() + len,
                                                      best.code.begin(), best.code.begin() + len));
    if (better) best = w.best;
  }
  total.tasks = frontier.size();
  result.stats = total;
  if (best.found) {
    result.value = best.value;
    result.witness = from_colex(n, s, best.code);
  }
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

namespace {

class Annealer {
 public:
  Annealer(int n, int s, const PatternIndex& index)
      : n_(n), s_(s), index_(index), m_(static_cast<std::size_t>(n) * n, 0) {}

  MinimizeResult run(std::uint64_t seed, const MinimizeOptions& opt, int chain) {
    SplitMix64 rng(seed);
    initialise(rng);
    classes_.clear();
    for (int col = 1; col <= s_; ++col) classes_.push_back(Graph(n_));
    hist_.assign(static_cast<std::size_t>(s_) + 1, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) {
        classes_[at(u, v) - 1].add_edge(u, v);
        ++hist_[at(u, v)];
      }
    alpha_.assign(static_cast<std::size_t>(s_) + 1, 0);
    for (int col = 1; col <= s_; ++col) alpha_[col] = independence_number(classes_[col - 1]);

    MinimizeResult best{snapshot(), h(), used(), chain, 0, 0, 0};
    MinimizeResult out = best;
    double energy = current_energy();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) pairs.emplace_back(u, v);
    if (s_ < 2 || pairs.empty()) return best;

    const double ratio = opt.budget > 1 ? std::pow(opt.t_end / opt.t_start, 1.0 / static_cast<double>(opt.budget - 1)) : 1.0;
    double temperature = opt.t_start;
    for (std::uint64_t it = 0; it < opt.budget; ++it, temperature *= ratio) {
      ++out.moves;
      const auto [u, v] = pairs[rng.below(pairs.size())];
      const int old_colour = at(u, v);
      int new_colour = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(s_ - 1)));
      if (new_colour >= old_colour) ++new_colour;
      set(u, v, new_colour);
      if (closes_copy(u, v)) {
        set(u, v, old_colour);
        ++out.pattern_rejected;
        continue;
      }
      apply_class_change(u, v, old_colour, new_colour);
      const double next = current_energy();
      const double delta = next - energy;
      const double draw = rng.unit();
      if (delta <= 0 || draw < std::exp(-delta / temperature)) {
        energy = next;
        ++out.accepted;
        const int hv = h();
        const int uc = used();
        if (hv < best.value || (hv == best.value && uc < best.used_colours)) {
          best.colouring = snapshot();
          best.value = hv;
          best.used_colours = uc;
        }
      } else {
        set(u, v, old_colour);
        apply_class_change(u, v, new_colour, old_colour);
      }
    }
    best.moves = out.moves;
    best.accepted = out.accepted;
    best.pattern_rejected = out.pattern_rejected;
    return best;
  }

 private:
  int at(int u, int v) const { return m_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(int u, int v, int col) {
    m_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint8_t>(col);
    m_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::uint8_t>(col);
  }

  Colouring snapshot() const {
    return Colouring::generate(n_, s_, [this](int u, int v) { return at(u, v); });
  }

  int h() const { return *std::max_element(alpha_.begin() + 1, alpha_.end()); }
  int used() const {
    return static_cast<int>(std::count_if(hist_.begin() + 1, hist_.end(), [](long x) { return x > 0; }));
  }
  double current_energy() const {
    const double sum = std::accumulate(alpha_.begin() + 1, alpha_.end(), 0.0);
    return h() + sum / (static_cast<double>(s_) * n_ + 1.0);
  }

  void apply_class_change(int u, int v, int from, int to) {
    classes_[from - 1].remove_edge(u, v);
    classes_[to - 1].add_edge(u, v);
    --hist_[from];
    ++hist_[to];
    alpha_[from] = independence_number(classes_[from - 1]);
    alpha_[to] = independence_number(classes_[to - 1]);
  }

  // Does some k-clique through u and v form a copy? Other vertices are taken
  // below `bound`, or from all of [n] when bound < 0.
  bool closes_copy(int u, int v, int bound = -1) const {
    const int k = index_.k();
    if (k == 2) return index_.contains(static_cast<std::uint64_t>(at(u, v)));
    std::vector<int> others;
    const int limit = bound < 0 ? n_ : bound;
    for (int x = 0; x < limit; ++x)
      if (x != u && x != v) others.push_back(x);
    const int r = k - 2;
    if (static_cast<int>(others.size()) < r) return false;
    std::array<int, 8> buf{};
    bool found = false;
    for_each_subset(static_cast<int>(others.size()), r, buf, 0, 0, [&] {
      if (found) return;
      std::array<int, 8> verts{};
      for (int i = 0; i < r; ++i) verts[i] = others[buf[i]];
      verts[r] = u;
      verts[r + 1] = v;
      std::sort(verts.begin(), verts.begin() + k);
      if (index_.contains(index_.key([&](int a, int b) { return at(verts[a], verts[b]); }))) found = true;
    });
    return found;
  }

  // Backtracking over edges in colex order with a random colour order per edge.
  void initialise(SplitMix64& rng) {
    std::vector<std::pair<int, int>> order;
    for (int v = 1; v < n_; ++v)
      for (int u = 0; u < v; ++u) order.emplace_back(u, v);
    std::vector<std::vector<int>> choices(order.size());
    for (auto& c : choices) {
      c.resize(static_cast<std::size_t>(s_));
      std::iota(c.begin(), c.end(), 1);
      shuffle(std::span(c), rng);
    }
    std::vector<int> pick(order.size(), 0);
    std::uint64_t steps = 0;
    constexpr std::uint64_t kMaxSteps = 50'000'000;
    std::size_t e = 0;
    while (e < order.size()) {
      auto [u, v] = order[e];
      bool placed = false;
      while (pick[e] < s_) {
        if (++steps > kMaxSteps) throw std::runtime_error("minimize_h: no pattern-free starting colouring found");
        set(u, v, choices[e][pick[e]]);
        ++pick[e];
        if (!closes_copy(u, v, u)) {
          placed = true;
          break;
        }
      }
      if (placed) {
        ++e;
        continue;
      }
      set(u, v, 0);
      pick[e] = 0;
      if (e == 0) throw std::runtime_error("minimize_h: no pattern-free colouring exists");
      --e;
    }
  }

  int n_;
  int s_;
  const PatternIndex& index_;
  std::vector<std::uint8_t> m_;
  std::vector<Graph> classes_;
  std::vector<long> hist_;
  std::vector<int> alpha_;
};

}  // namespace

MinimizeResult minimize_h(int n, int s, const Pattern& pattern, const MinimizeOptions& options) {
  if (n < 1 || s < 1) throw std::invalid_argument("minimize_h: n and s must be positive");
  if (options.chains < 1) throw std::invalid_argument("minimize_h: need at least one chain");
  if (!(options.t_start > 0 && options.t_end > 0)) throw std::invalid_argument("minimize_h: temperatures must be positive");
  check_search_pattern(pattern, s);
  const PatternIndex index(pattern);
  std::vector<std::optional<MinimizeResult>> results(static_cast<std::size_t>(options.chains));
  detail::parallel_for(results.size(), options.workers, [&](std::size_t c) {
    Annealer annealer(n, s, index);
    const std::uint64_t seed = options.chains == 1 ? options.seed : derive_seed(options.seed, c);
    results[c] = annealer.run(seed, options, static_cast<int>(c));
  });
  std::size_t pick = 0;
  for (std::size_t c = 1; c < results.size(); ++c) {
    const auto& a = *results[c];
    const auto& b = *results[pick];
    if (a.value < b.value || (a.value == b.value && a.used_colours < b.used_colours)) pick = c;
  }
  return *results[pick];
}

MonotoneReport verify_monotone(int n, const Pattern& pattern, int s, const SearchOptions& options) {
  MonotoneReport r;
  r.n = n;
  r.s = s;
  r.hypothesis_met = s > used_colours(pattern);
  r.lower = exact_h(n, s, pattern, options);
  r.upper = exact_h(n, s + 1, pattern, options);
  if (r.lower.value)
    r.holds = r.upper.value && *r.upper.value >= *r.lower.value;
  else
    r.holds = !r.upper.value;
  return r;
}

int ceil_sqrt(int n) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

SqrtBoundReport sqrt_bound_check(int n, const SearchOptions& options) {
  static const Pattern two_one(3, 2, {1, 2, 1});
  SqrtBoundReport r;
  r.n = n;
  r.result = exact_h(n, 3, two_one, options);
  r.ceil_sqrt = ceil_sqrt(n);
  r.holds = r.result.value && *r.result.value >= r.ceil_sqrt;
  return r;
}

}  // namespace ehlab
