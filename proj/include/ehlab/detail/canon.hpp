#pragma once

// Lexicographic-minimum canonical labelling of small edge-coloured cliques.
// Edge strings are in colex order (0,1),(0,2),(1,2),(0,3),... so the string of
// the first m vertices is a prefix of the string of the first m+1 vertices.

#include <cstdint>
#include <vector>

namespace ehlab::detail {

inline int colex_index(int u, int v) { return v * (v - 1) / 2 + u; }

// twins[v] has bit w set when swapping v and w is a colour-preserving automorphism.
template <class ColourFn>
std::vector<std::uint64_t> twin_masks(int n, const ColourFn& colour) {
  std::vector<std::uint64_t> twins(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      bool same = true;
      for (int x = 0; x < n && same; ++x)
        if (x != v && x != w && colour(v, x) != colour(w, x)) same = false;
      if (same) {
        twins[v] |= std::uint64_t{1} << w;
        twins[w] |= std::uint64_t{1} << v;
      }
    }
  return twins;
}

template <class ColourFn>
class LexMinSearch {
 public:
  LexMinSearch(int n, const ColourFn& colour)
      : n_(n),
        colour_(colour),
        twins_(twin_masks(n, colour)),
        order_(static_cast<std::size_t>(n)),
        cur_(static_cast<std::size_t>(n * (n - 1) / 2)) {}

  // Smallest string; `best_order[p]` is the original vertex placed at position p.
  void minimise(std::vector<std::uint8_t>& best, std::vector<int>& best_order) {
    have_best_ = false;
    best_ = &best;
    best_order_ = &best_order;
    descend_min(0, 0);
  }

  // True iff no relabelling yields a string smaller than `identity`.
  bool identity_is_minimal(const std::vector<std::uint8_t>& identity) {
    identity_ = &identity;
    return descend_check(0, 0);
  }

 private:
  bool skip_as_twin(int v, std::uint64_t used) const {
    const std::uint64_t lower = (std::uint64_t{1} << v) - 1;
    return (twins_[v] & lower & ~used) != 0;
  }

  void fill_column(int p, int v) {
    const int base = p * (p - 1) / 2;
    for (int q = 0; q < p; ++q)
      cur_[static_cast<std::size_t>(base + q)] = static_cast<std::uint8_t>(colour_(order_[q], v));
  }

  void descend_min(int p, std::uint64_t used) {
    if (p == n_) {
      const bool better = !have_best_ || cur_ < *best_;
      if (better) {
        *best_ = cur_;
        *best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    const int end = p * (p + 1) / 2;
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      if (skip_as_twin(v, used)) continue;
      order_[p] = v;
      fill_column(p, v);
      if (have_best_) {
        int cmp = 0;
        for (int i = 0; i < end && cmp == 0; ++i)
          cmp = (cur_[i] < (*best_)[i]) ? -1 : (cur_[i] > (*best_)[i] ? 1 : 0);
        if (cmp > 0) continue;
      }
      descend_min(p + 1, used | (std::uint64_t{1} << v));
    }
  }

  // Returns false as soon as a strictly smaller string is found.
  bool descend_check(int p, std::uint64_t used) {
    if (p == n_) return true;
    const int base = p * (p - 1) / 2;
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      if (skip_as_twin(v, used)) continue;
      order_[p] = v;
      int cmp = 0;
      for (int q = 0; q < p && cmp == 0; ++q) {
        const int a = colour_(order_[q], v);
        const int b = (*identity_)[static_cast<std::size_t>(base + q)];
        cmp = a < b ? -1 : (a > b ? 1 : 0);
      }
      if (cmp < 0) return false;
      if (cmp > 0) continue;
      if (!descend_check(p + 1, used | (std::uint64_t{1} << v))) return false;
    }
    return true;
  }

  int n_;
  const ColourFn& colour_;
  std::vector<std::uint64_t> twins_;
  std::vector<int> order_;
  std::vector<std::uint8_t> cur_;
  bool have_best_ = false;
  std::vector<std::uint8_t>* best_ = nullptr;
  std::vector<int>* best_order_ = nullptr;
  const std::vector<std::uint8_t>* identity_ = nullptr;
};

}  // namespace ehlab::detail
