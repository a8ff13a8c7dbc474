#include <doctest.h>

#include <random>

#include "ehlab/homog.hpp"
#include "oracles.hpp"

using namespace ehlab;

namespace {

const Colouring kRainbow(3, 3, {1, 2, 3});
const Colouring kDoubleP4(4, 2, {1, 2, 2, 1, 2, 1});

Graph cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete(int n) { return Graph(n).complement(); }

bool induces_only(const Colouring& c, const std::vector<int>& w, const std::vector<int>& colours) {
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (std::find(colours.begin(), colours.end(), c.colour(w[a], w[b])) == colours.end()) return false;
  return true;
}

}  // namespace

TEST_SUITE("homog") {
  TEST_CASE("maximum independent set basics") {
    const auto empty = max_independent_set(Graph(5));
    CHECK(empty.size == 5);
    CHECK(empty.witness == std::vector<int>{0, 1, 2, 3, 4});
    const auto k5 = max_independent_set(complete(5));
    CHECK(k5.size == 1);
    CHECK(k5.witness.size() == 1);
    const auto c7 = max_independent_set(cycle(7));
    CHECK(c7.size == oracle::mis(cycle(7)).size);
    CHECK(c7.size == 3);
    CHECK(cycle(7).is_independent(c7.witness));
    CHECK(max_independent_set(Graph(0)).size == 0);
  }

  TEST_CASE("MIS matches 2^n brute force on 300 random graphs") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
      const int n = 1 + static_cast<int>(rng() % 16);
      const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
      const auto g = oracle::random_graph(n, p, rng);
      const auto want = oracle::mis(g);
      const auto got = max_independent_set(g);
      REQUIRE(got.size == want.size);
      CHECK(got.witness == want.witness);
      CHECK(independence_number(g) == want.size);
    }
  }

  TEST_CASE("MIS on larger sparse graphs") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
      const auto g = oracle::random_graph(70, 0.1, rng);
      const auto r = max_independent_set(g);
      CHECK(g.is_independent(r.witness));
      CHECK(static_cast<int>(r.witness.size()) == r.size);
      // Adding any vertex breaks independence (maximality).
      for (int v = 0; v < 70; ++v) {
        if (std::find(r.witness.begin(), r.witness.end(), v) != r.witness.end()) continue;
        auto w = r.witness;
        w.push_back(v);
        CHECK_FALSE(g.is_independent(w));
      }
    }
  }

  TEST_CASE("homogeneous number") {
    const auto mono = homogeneous_number(Colouring::monochromatic(6, 2, 1));
    CHECK(mono.value == 6);
    CHECK(mono.missing_colour == 2);
    CHECK(homogeneous_number(kRainbow).value == 2);
    CHECK(homogeneous_number(kDoubleP4).value == 2);
    CHECK(homogeneous_number(kDoubleP4).value == oracle::homogeneous(kDoubleP4).value);
    CHECK(h_from_s_cliques(kRainbow).value == 2);
    CHECK(h_from_s_cliques(Colouring::monochromatic(6, 3, 1)).value == 6);
  }

  TEST_CASE("two formulations of h agree with brute force") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
      const int n = 1 + static_cast<int>(rng() % 10);
      const int s = 1 + static_cast<int>(rng() % 4);
      const auto c = oracle::random_colouring(n, s, rng);
      const auto want = oracle::homogeneous(c);
      const auto a = homogeneous_number(c);
      const auto b = h_from_s_cliques(c);
      REQUIRE(a.value == want.value);
      CHECK(a.missing_colour == want.colour);
      CHECK(b.value == a.value);
      CHECK(static_cast<int>(a.witness.size()) == a.value);
      for (std::size_t x = 0; x < a.witness.size(); ++x)
        for (std::size_t y = x + 1; y < a.witness.size(); ++y)
          CHECK(c.colour(a.witness[x], a.witness[y]) != a.missing_colour);
    }
  }

  TEST_CASE("S_I") {
    CHECK(s_clique(kRainbow, {1, 2, 3}).value == 3);
    CHECK(s_clique(kRainbow, {1, 2}).value == 2);
    CHECK_THROWS(s_clique(kRainbow, {}));
    CHECK_THROWS(s_clique(kRainbow, {4}));

    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
      const int n = 2 + static_cast<int>(rng() % 9);
      const auto c = oracle::random_colouring(n, 4, rng);
      CHECK(s_clique(c, {1, 2, 3, 4}).value == n);
      // All nonempty I, with monotonicity along inclusion.
      std::vector<int> value(16, 0);
      for (int mask = 1; mask < 16; ++mask) {
        const auto I = oracle::bits_of(static_cast<std::uint32_t>(mask));
        std::vector<int> colours;
        for (int i : I) colours.push_back(i + 1);
        const auto r = s_clique(c, colours);
        value[mask] = r.value;
        CHECK(r.value == oracle::s_clique(c, colours));
        CHECK(static_cast<int>(r.witness.size()) == r.value);
        CHECK(induces_only(c, r.witness, colours));
      }
      for (int a = 1; a < 16; ++a)
        for (int b = 1; b < 16; ++b)
          if ((a & b) == a) CHECK(value[a] <= value[b]);
    }
  }

  TEST_CASE("P4-freeness and cotrees") {
    CHECK(is_p4_free(cycle(4)));
    const auto ao = cograph_alpha_omega(cycle(4));
    CHECK(ao.alpha == 2);
    CHECK(ao.omega == 2);

    Graph p4(4);
    p4.add_edge(0, 1);
    p4.add_edge(1, 2);
    p4.add_edge(2, 3);
    CHECK_FALSE(is_p4_free(p4));
    CHECK_FALSE(build_cotree(p4).has_value());
    CHECK_THROWS_AS(cograph_alpha_omega(p4), std::invalid_argument);
    CHECK_FALSE(is_p4_free(cycle(5)));
  }

  TEST_CASE("P4-freeness against the 4-subset scan") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
      const int n = 1 + static_cast<int>(rng() % 9);
      const auto g = oracle::random_graph(n, 0.5, rng);
      bool induced_p4 = false;
      for (std::uint32_t m = 0; m < (1u << n) && !induced_p4; ++m) {
        if (std::popcount(m) != 4) continue;
        const auto sub = oracle::bits_of(m);
        const Graph h = g.induced(sub);
        // P4: 3 edges, degree sequence 1,1,2,2, connected.
        std::vector<int> deg;
        for (int v = 0; v < 4; ++v) deg.push_back(h.degree(v));
        std::sort(deg.begin(), deg.end());
        induced_p4 = h.edge_count() == 3 && deg == std::vector<int>{1, 1, 2, 2};
      }
      CHECK(is_p4_free(g) == !induced_p4);
      CHECK(build_cotree(g).has_value() == !induced_p4);
    }
  }

  TEST_CASE("random cographs") {
    std::mt19937_64 rng(50);
    for (int t = 0; t < 60; ++t) {
      const int n = 1 + static_cast<int>(rng() % 50);
      const auto g = oracle::random_cograph(n, rng);
      REQUIRE(is_p4_free(g));
      const auto ao = cograph_alpha_omega(g);
      CHECK(ao.alpha * ao.omega >= n);
      CHECK(ao.alpha == independence_number(g));
      CHECK(ao.omega == independence_number(g.complement()));
      if (n <= 14) {
        CHECK(ao.alpha == oracle::mis(g).size);
        CHECK(ao.omega == oracle::clique(g));
      }
    }
  }
}
