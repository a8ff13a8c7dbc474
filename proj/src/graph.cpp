#include "ehlab/graph.hpp"

#include <stdexcept>

namespace ehlab {

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  rows_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("graph: loops are not allowed");
  rows_[row_offset(u) + (v >> 6)] |= Word{1} << (v & 63);
  rows_[row_offset(v) + (u >> 6)] |= Word{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  rows_[row_offset(u) + (v >> 6)] &= ~(Word{1} << (v & 63));
  rows_[row_offset(v) + (u >> 6)] &= ~(Word{1} << (u & 63));
}

int Graph::degree(int v) const { return bits::count(row(v)); }

long Graph::edge_count() const {
  long twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) g.add_edge(u, v);
  return g;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  Graph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (has_edge(vertices[i], vertices[j])) g.add_edge(i, j);
  return g;
}

bool Graph::is_independent(std::span<const int> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || has_edge(vertices[i], vertices[j])) return false;
  return true;
}

bool Graph::is_clique(std::span<const int> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!has_edge(vertices[i], vertices[j])) return false;
  return true;
}

namespace bits {

std::vector<Word> full(int n) {
  std::vector<Word> b(static_cast<std::size_t>(words_for(n)), 0);
  for (int i = 0; i < n; ++i) set(b, i);
  return b;
}

}  // namespace bits

}  // namespace ehlab
