#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace ehlab {

using Word = std::uint64_t;

inline int words_for(int n) { return (n + 63) / 64; }

// Simple undirected graph on vertices 0..n-1 stored as bitmask adjacency rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  int words() const { return words_; }

  bool has_edge(int u, int v) const {
    return (rows_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::span<const Word> row(int v) const {
    return {rows_.data() + row_offset(v), static_cast<std::size_t>(words_)};
  }

  int degree(int v) const;
  long edge_count() const;

  Graph complement() const;
  // Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const int> vertices) const;

  bool is_independent(std::span<const int> vertices) const;
  bool is_clique(std::span<const int> vertices) const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t row_offset(int v) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<Word> rows_;
};

namespace bits {

inline void set(std::span<Word> b, int i) { b[i >> 6] |= Word{1} << (i & 63); }
inline void reset(std::span<Word> b, int i) { b[i >> 6] &= ~(Word{1} << (i & 63)); }
inline bool test(std::span<const Word> b, int i) { return (b[i >> 6] >> (i & 63)) & 1U; }

inline int count(std::span<const Word> b) {
  int c = 0;
  for (Word w : b) c += std::popcount(w);
  return c;
}

inline bool none(std::span<const Word> b) {
  for (Word w : b)
    if (w) return false;
  return true;
}

// Index of the lowest set bit, or -1.
inline int first(std::span<const Word> b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i]) return static_cast<int>(i * 64) + std::countr_zero(b[i]);
  return -1;
}

// Bitset with the low n bits set.
std::vector<Word> full(int n);

}  // namespace bits

}  // namespace ehlab
