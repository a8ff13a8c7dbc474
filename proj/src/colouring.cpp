#include "ehlab/colouring.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ehlab/detail/canon.hpp"

namespace ehlab {

namespace {

void check_dimensions(int n, int s) {
  if (n < 1) throw std::invalid_argument("colouring: n must be at least 1");
  if (s < 1 || s > kMaxPalette)
    throw std::invalid_argument("colouring: palette size must be in 1.." + std::to_string(kMaxPalette));
}

}  // namespace

Colouring::Colouring(int n, int s) : n_(n), s_(s) {
  check_dimensions(n, s);
  m_.assign(static_cast<std::size_t>(n) * n, 0);
}

Colouring::Colouring(int n, int s, std::span<const int> row_major) : Colouring(n, s) {
  if (static_cast<long>(row_major.size()) != pair_count(n))
    throw std::invalid_argument("colouring: expected " + std::to_string(pair_count(n)) +
                                " edge colours, got " + std::to_string(row_major.size()));
  std::size_t i = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) put(u, v, row_major[i++]);
}

Colouring Colouring::monochromatic(int n, int s, int colour) {
  return generate(n, s, [colour](int, int) { return colour; });
}

void Colouring::put(int u, int v, int colour) {
  if (colour < 1 || colour > s_)
    throw std::invalid_argument("colouring: colour " + std::to_string(colour) + " outside 1.." +
                                std::to_string(s_));
  m_[static_cast<std::size_t>(u) * n_ + v] = static_cast<std::uint8_t>(colour);
  m_[static_cast<std::size_t>(v) * n_ + u] = static_cast<std::uint8_t>(colour);
}

int Colouring::colour(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("colouring: vertex out of range");
  if (u == v) throw std::out_of_range("colouring: no colour on a loop");
  return at(u, v);
}

std::vector<int> Colouring::row_major() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(pair_count(n_)));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) out.push_back(at(u, v));
  return out;
}

std::vector<long> Colouring::histogram() const {
  std::vector<long> h(static_cast<std::size_t>(s_) + 1, 0);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) ++h[at(u, v)];
  return h;
}

Colouring Colouring::restrict_to(std::span<const int> vertices) const {
  const int k = static_cast<int>(vertices.size());
  if (k < 1) throw std::invalid_argument("colouring: empty restriction");
  for (int x : vertices)
    if (x < 0 || x >= n_) throw std::out_of_range("colouring: vertex out of range");
  return generate(k, s_, [&](int a, int b) {
    if (vertices[a] == vertices[b]) throw std::invalid_argument("colouring: repeated vertex");
    return at(vertices[a], vertices[b]);
  });
}

Colouring Colouring::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabel: wrong permutation size");
  std::vector<int> inverse(static_cast<std::size_t>(n_), -1);
  for (int x = 0; x < n_; ++x) {
    const int y = perm[x];
    if (y < 0 || y >= n_ || inverse[y] != -1) throw std::invalid_argument("relabel: not a permutation");
    inverse[y] = x;
  }
  return generate(n_, s_, [&](int a, int b) { return at(inverse[a], inverse[b]); });
}

Colouring Colouring::with_palette(int s) const {
  if (s < s_) {
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (at(u, v) > s) throw std::invalid_argument("with_palette: colour in use exceeds new palette");
  }
  return generate(n_, s, [&](int u, int v) { return at(u, v); });
}

void require_pattern(const Pattern& p) {
  if (p.n() < 2) throw std::invalid_argument("pattern must have at least 2 vertices");
}

ColourClass colour_class(const Colouring& c, int colour) {
  if (colour < 1 || colour > c.s()) throw std::invalid_argument("colour_class: colour out of range");
  ColourClass cls{colour, Graph(c.n())};
  for (int u = 0; u < c.n(); ++u)
    for (int v = u + 1; v < c.n(); ++v)
      if (c.at(u, v) == colour) cls.graph.add_edge(u, v);
  return cls;
}

std::vector<ColourClass> colour_classes(const Colouring& c) {
  std::vector<ColourClass> out;
  out.reserve(static_cast<std::size_t>(c.s()));
  for (int i = 1; i <= c.s(); ++i) out.push_back(ColourClass{i, Graph(c.n())});
  for (int u = 0; u < c.n(); ++u)
    for (int v = u + 1; v < c.n(); ++v) out[c.at(u, v) - 1].graph.add_edge(u, v);
  return out;
}

int used_colours(const Colouring& c) {
  const auto h = c.histogram();
  return static_cast<int>(std::count_if(h.begin() + 1, h.end(), [](long x) { return x > 0; }));
}

Palette::Palette(int k_, std::vector<int> counts_) : k(k_), counts(std::move(counts_)) {
  if (k < 2) throw std::invalid_argument("palette: clique size must be at least 2");
  if (counts.empty()) throw std::invalid_argument("palette: no colour counts");
  long total = 0;
  for (int t : counts) {
    if (t < 0) throw std::invalid_argument("palette: negative count");
    total += t;
  }
  if (total != pair_count(k))
    throw std::invalid_argument("palette: counts sum to " + std::to_string(total) + ", expected " +
                                std::to_string(pair_count(k)));
}

namespace {

struct CanonicalLabelling {
  std::vector<std::uint8_t> code;
  std::vector<int> order;
};

CanonicalLabelling canonical_labelling(const Colouring& c, int max_n) {
  if (c.n() > max_n || c.n() > 63)
    throw CapExceeded("canonical form: n = " + std::to_string(c.n()) + " exceeds cap " +
                      std::to_string(std::min(max_n, 63)));
  auto colour = [&c](int u, int v) { return c.at(u, v); };
  CanonicalLabelling out;
  detail::LexMinSearch<decltype(colour)> search(c.n(), colour);
  search.minimise(out.code, out.order);
  return out;
}

}  // namespace

std::string canonical_form(const Colouring& c, int max_n) {
  const auto lab = canonical_labelling(c, max_n);
  std::string out;
  out.reserve(lab.code.size() + 2);
  out.push_back(static_cast<char>(c.n()));
  out.push_back(static_cast<char>(c.s()));
  for (auto x : lab.code) out.push_back(static_cast<char>(x));
  return out;
}

Colouring canonical_relabel(const Colouring& c, int max_n) {
  const auto lab = canonical_labelling(c, max_n);
  // lab.order[p] is the original vertex placed at position p.
  std::vector<int> perm(static_cast<std::size_t>(c.n()));
  for (int p = 0; p < c.n(); ++p) perm[lab.order[p]] = p;
  return c.relabel(perm);
}

namespace {

std::vector<std::vector<long>> colour_degree_profile(const Colouring& c) {
  std::vector<std::vector<long>> rows(static_cast<std::size_t>(c.n()),
                                      std::vector<long>(static_cast<std::size_t>(c.s()) + 1, 0));
  for (int u = 0; u < c.n(); ++u)
    for (int v = 0; v < c.n(); ++v)
      if (u != v) ++rows[u][c.at(u, v)];
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

bool are_isomorphic(const Colouring& a, const Colouring& b, int max_n) {
  if (a.n() != b.n() || a.s() != b.s()) return false;
  if (colour_degree_profile(a) != colour_degree_profile(b)) return false;
  return canonical_form(a, max_n) == canonical_form(b, max_n);
}

std::string to_ehc(const Colouring& c) {
  std::ostringstream out;
  out << "ehc 1\n" << c.n() << ' ' << c.s() << '\n';
  for (int u = 0; u + 1 < c.n(); ++u) {
    for (int v = u + 1; v < c.n(); ++v) {
      if (v > u + 1) out << ' ';
      out << c.at(u, v);
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<long> parse_ints(std::string_view line, int line_no) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      throw ParseError("ehc line " + std::to_string(line_no) + ": expected integers");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Colouring parse_ehc(std::string_view text) {
  // Content lines with their 1-based line numbers.
  std::vector<std::pair<std::string_view, int>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    ++line_no;
    pos = nl + 1;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    lines.emplace_back(line, line_no);
  }
  if (lines.empty()) throw ParseError("ehc: empty input");

  auto header = lines[0].first;
  while (!header.empty() && (header.back() == '\r' || header.back() == ' ')) header.remove_suffix(1);
  if (header != "ehc 1") throw ParseError("ehc: missing 'ehc 1' header");
  if (lines.size() < 2) throw ParseError("ehc: missing '<n> <s>' line");

  const auto dims = parse_ints(lines[1].first, lines[1].second);
  if (dims.size() != 2) throw ParseError("ehc line " + std::to_string(lines[1].second) + ": expected '<n> <s>'");
  if (dims[0] < 1 || dims[0] > 100000) throw ParseError("ehc: n out of range");
  if (dims[1] < 1 || dims[1] > kMaxPalette) throw ParseError("ehc: s out of range");
  const int n = static_cast<int>(dims[0]);
  const int s = static_cast<int>(dims[1]);

  if (static_cast<long>(lines.size()) - 2 != n - 1)
    throw ParseError("ehc: expected " + std::to_string(n - 1) + " edge rows, got " +
                     std::to_string(lines.size() - 2));
  std::vector<int> edges;
  edges.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int u = 0; u + 1 < n; ++u) {
    const auto& [line, no] = lines[static_cast<std::size_t>(u) + 2];
    const auto row = parse_ints(line, no);
    if (static_cast<int>(row.size()) != n - 1 - u)
      throw ParseError("ehc line " + std::to_string(no) + ": expected " + std::to_string(n - 1 - u) +
                       " colours, got " + std::to_string(row.size()));
    for (long x : row) {
      if (x < 1 || x > s)
        throw ParseError("ehc line " + std::to_string(no) + ": colour " + std::to_string(x) +
                         " outside 1.." + std::to_string(s));
      edges.push_back(static_cast<int>(x));
    }
  }
  return Colouring(n, s, edges);
}

Colouring read_ehc_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ehc(buf.str());
}

void write_ehc_file(const std::filesystem::path& path, const Colouring& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_ehc(c);
}

}  // namespace ehlab
