#include "ehlab/detect.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <stdexcept>

namespace ehlab {

namespace {

void check_instance(const Colouring& host, const Pattern& pattern) {
  require_pattern(pattern);
  if (pattern.n() > host.n())
    throw std::invalid_argument("detect: pattern has " + std::to_string(pattern.n()) +
                                " vertices, host only " + std::to_string(host.n()));
  const auto hist = pattern.histogram();
  for (int col = host.s() + 1; col < static_cast<int>(hist.size()); ++col)
    if (hist[col] > 0)
      throw std::invalid_argument("detect: pattern uses colour " + std::to_string(col) +
                                  " outside the host palette");
}

std::vector<std::vector<int>> colour_degrees(const Colouring& c, int palette) {
  std::vector<std::vector<int>> deg(static_cast<std::size_t>(c.n()),
                                    std::vector<int>(static_cast<std::size_t>(palette) + 1, 0));
  for (int u = 0; u < c.n(); ++u)
    for (int v = 0; v < c.n(); ++v)
      if (u != v) ++deg[u][c.at(u, v)];
  return deg;
}

// Backtracking over pattern vertices 0..k-1; candidates per pattern vertex are
// host vertices whose colour-degree vector dominates the pattern vertex's.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Colouring& host, const Pattern& pattern) : host_(host), pattern_(pattern) {
    const int palette = std::max(host.s(), pattern.s());
    const auto hdeg = colour_degrees(host, palette);
    const auto pdeg = colour_degrees(pattern, palette);
    candidates_.resize(static_cast<std::size_t>(pattern.n()));
    for (int x = 0; x < pattern.n(); ++x)
      for (int v = 0; v < host.n(); ++v) {
        bool ok = true;
        for (int col = 1; col <= palette && ok; ++col) ok = hdeg[v][col] >= pdeg[x][col];
        if (ok) candidates_[x].push_back(v);
      }
    map_.assign(static_cast<std::size_t>(pattern.n()), -1);
    used_.assign(static_cast<std::size_t>(host.n()), false);
  }

  const std::vector<int>& candidates(int x) const { return candidates_[x]; }

  // Calls `visit(map)` for every embedding with map[0] == first (or any first
  // when first < 0); stops when visit returns false. Returns false if stopped.
  bool run(int first, const std::function<bool(const std::vector<int>&)>& visit) {
    visit_ = &visit;
    if (first < 0) return extend(0);
    map_[0] = first;
    used_[first] = true;
    const bool r = extend(1);
    used_[first] = false;
    return r;
  }

 private:
  bool extend(int x) {
    if (x == pattern_.n()) return (*visit_)(map_);
    for (int v : candidates_[x]) {
      if (used_[v]) continue;
      bool ok = true;
      for (int y = 0; y < x && ok; ++y) ok = host_.at(map_[y], v) == pattern_.at(y, x);
      if (!ok) continue;
      map_[x] = v;
      used_[v] = true;
      const bool go_on = extend(x + 1);
      used_[v] = false;
      if (!go_on) return false;
    }
    return true;
  }

  const Colouring& host_;
  const Pattern& pattern_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> map_;
  std::vector<bool> used_;
  const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

std::int64_t count_embeddings(const Colouring& host, const Pattern& pattern, int workers) {
  EmbeddingSearch probe(host, pattern);
  const auto& firsts = probe.candidates(0);
  auto count_range = [&](std::size_t begin, std::size_t step) {
    EmbeddingSearch search(host, pattern);
    std::int64_t total = 0;
    for (std::size_t i = begin; i < firsts.size(); i += step)
      search.run(firsts[i], [&total](const std::vector<int>&) {
        ++total;
        return true;
      });
    return total;
  };
  workers = std::max(1, std::min<int>(workers, static_cast<int>(firsts.size())));
  if (workers == 1) return count_range(0, 1);
  std::vector<std::future<std::int64_t>> parts;
  for (int w = 0; w < workers; ++w)
    parts.push_back(std::async(std::launch::async, count_range, static_cast<std::size_t>(w),
                               static_cast<std::size_t>(workers)));
  std::int64_t total = 0;
  for (auto& p : parts) total += p.get();
  return total;
}

}  // namespace

std::optional<Embedding> find_copy(const Colouring& host, const Pattern& pattern) {
  check_instance(host, pattern);
  EmbeddingSearch search(host, pattern);
  std::optional<Embedding> found;
  search.run(-1, [&found](const std::vector<int>& map) {
    found = Embedding{map};
    return false;
  });
  return found;
}

bool is_free(const Colouring& host, const Pattern& pattern) { return !find_copy(host, pattern).has_value(); }

std::int64_t automorphism_count(const Pattern& pattern) {
  require_pattern(pattern);
  return count_embeddings(pattern, pattern, 1);
}

std::int64_t count_copies(const Colouring& host, const Pattern& pattern, int workers) {
  check_instance(host, pattern);
  // Each copy's vertex set is the image of exactly |Aut(pattern)| embeddings.
  return count_embeddings(host, pattern, workers) / automorphism_count(pattern);
}

bool is_embedding(const Colouring& host, const Pattern& pattern, const Embedding& e) {
  if (static_cast<int>(e.map.size()) != pattern.n()) return false;
  for (int x = 0; x < pattern.n(); ++x) {
    if (e.map[x] < 0 || e.map[x] >= host.n()) return false;
    for (int y = x + 1; y < pattern.n(); ++y) {
      if (e.map[x] == e.map[y]) return false;
      if (host.at(e.map[x], e.map[y]) != pattern.at(x, y)) return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> find_palette_copy(const Colouring& host, const Palette& palette) {
  const int k = palette.k;
  const int listed = static_cast<int>(palette.counts.size());
  if (listed > host.s())
    throw std::invalid_argument("palette: " + std::to_string(listed) + " counts for a " +
                                std::to_string(host.s()) + "-colouring");
  if (k > host.n()) throw std::invalid_argument("palette: clique larger than host");

  std::vector<int> hist(static_cast<std::size_t>(host.s()) + 1, 0);
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));

  auto allowed = [&](int col) { return col <= listed && hist[col] <= palette.counts[col - 1]; };

  std::function<bool(int)> extend = [&](int from) -> bool {
    if (static_cast<int>(chosen.size()) == k) return true;
    const int need = k - static_cast<int>(chosen.size());
    for (int v = from; v <= host.n() - need; ++v) {
      bool ok = true;
      std::size_t added = 0;
      for (; added < chosen.size(); ++added) {
        const int col = host.at(chosen[added], v);
        ++hist[col];
        if (!allowed(col)) {
          ++added;
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen.push_back(v);
        if (extend(v + 1)) return true;
        chosen.pop_back();
      }
      for (std::size_t i = 0; i < added; ++i) --hist[host.at(chosen[i], v)];
    }
    return false;
  };

  if (extend(0)) return chosen;
  return std::nullopt;
}

}  // namespace ehlab
