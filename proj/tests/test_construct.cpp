#include <doctest.h>

#include <random>

#include "ehlab/construct.hpp"
#include "ehlab/detect.hpp"
#include "ehlab/homog.hpp"
#include "ehlab/search.hpp"
#include "oracles.hpp"

using namespace ehlab;

namespace {

const Colouring kRainbow(3, 3, {1, 2, 3});
const Colouring kDoubleP4(4, 2, {1, 2, 2, 1, 2, 1});

std::vector<std::vector<int>> nonempty_subsets(int s) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << s); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < s; ++i)
      if (mask >> i & 1) I.push_back(i + 1);
    out.push_back(I);
  }
  return out;
}

// Direct definition of the product, written independently of the library.
Colouring naive_product(const Colouring& a, const Colouring& b) {
  const int y = b.n();
  return Colouring::generate(a.n() * y, a.s(), [&](int u, int v) {
    return u / y == v / y ? b.colour(u % y, v % y) : a.colour(u / y, v / y);
  });
}

}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("product of two edges") {
    const auto p = lex_product(Colouring(2, 2, {1}), Colouring(2, 2, {2}));
    CHECK(p == Colouring(4, 2, {2, 1, 1, 1, 1, 2}));
    CHECK(s_clique(p, {1}).value == 2);
    CHECK_THROWS(lex_product(Colouring(2, 2, {1}), Colouring(2, 3, {2})));
  }

  TEST_CASE("product layout and associativity") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
      const auto a = oracle::random_colouring(3, 3, rng);
      const auto b = oracle::random_colouring(3, 3, rng);
      const auto c = oracle::random_colouring(3, 3, rng);
      CHECK(lex_product(a, b) == naive_product(a, b));
      const auto left = lex_product(lex_product(a, b), c);
      const auto right = lex_product(a, lex_product(b, c));
      CHECK(left == right);
      const std::vector<Colouring> fs{a, b, c};
      CHECK(lex_product(fs) == left);
    }
    const std::vector<int> sizes{2, 3, 4};
    CHECK(product_coordinates(0, sizes) == std::vector<int>{0, 0, 0});
    CHECK(product_coordinates(23, sizes) == std::vector<int>{1, 2, 3});
    CHECK(product_coordinates(13, sizes) == std::vector<int>{1, 0, 1});
  }

  TEST_CASE("product identity for S_I") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 30; ++t) {
      const int s = 1 + static_cast<int>(rng() % 4);
      const auto a = oracle::random_colouring(2 + static_cast<int>(rng() % 5), s, rng);
      const auto b = oracle::random_colouring(2 + static_cast<int>(rng() % 5), s, rng);
      const auto p = lex_product(a, b);
      for (const auto& I : nonempty_subsets(s))
        CHECK(s_clique(p, I).value == oracle::s_clique(a, I) * oracle::s_clique(b, I));
    }
  }

  TEST_CASE("rainbow-freeness survives products") {
    std::mt19937_64 rng(8);
    int tested = 0;
    for (int t = 0; t < 400 && tested < 20; ++t) {
      const auto a = oracle::random_colouring(4, 3, rng);
      const auto b = oracle::random_colouring(4, 3, rng);
      if (!is_free(a, kRainbow) || !is_free(b, kRainbow)) continue;
      ++tested;
      CHECK(is_free(lex_product(a, b), kRainbow));
    }
    CHECK(tested > 0);
  }

  TEST_CASE("merging colours") {
    const auto m = merge_colours(Colouring::monochromatic(4, 3, 3), 3, 1);
    CHECK(m == Colouring::monochromatic(4, 3, 1));
    CHECK_THROWS(merge_colours(m, 1, 1));
    CHECK_THROWS(merge_colours(m, 4, 1));

    std::mt19937_64 rng(12);
    const auto c = oracle::random_colouring(6, 4, rng);
    const auto merged = merge_colours(c, 4, 2);
    CHECK(merged.histogram()[4] == 0);
    CHECK(merged.histogram()[2] == c.histogram()[2] + c.histogram()[4]);
    CHECK(merged.s() == 4);
  }

  TEST_CASE("merging into a pattern colour can create a copy") {
    // Search seeded colourings for a rainbow-{1,2,3}-free 4-colouring of K_6
    // where sending colour 4 to colour 3 produces a rainbow triangle.
    std::mt19937_64 rng(0);
    bool witnessed = false;
    for (int t = 0; t < 20000 && !witnessed; ++t) {
      const auto c = oracle::random_colouring(6, 4, rng);
      if (!is_free(c, kRainbow)) continue;
      witnessed = !is_free(merge_colours(c, 4, 3), kRainbow);
    }
    CHECK(witnessed);
  }

  TEST_CASE("merging into an unused colour keeps the pattern out") {
    std::mt19937_64 rng(31);
    const Pattern p(3, 3, {1, 1, 2});  // uses colours 1 and 2 only
    for (int t = 0; t < 300; ++t) {
      const auto c = oracle::random_colouring(6, 4, rng);
      if (!is_free(c, p)) continue;
      CHECK(is_free(merge_colours(c, 4, 3), p));
    }
  }

  TEST_CASE("recolouring with an extra colour") {
    std::mt19937_64 rng(2);
    const auto c = oracle::random_colouring(8, 3, rng);
    CHECK(recolour_extra(c, 0.0, 1) == c.with_palette(4));
    CHECK(recolour_extra(c, 1.0, 1) == Colouring::monochromatic(8, 4, 4));
    CHECK(recolour_extra(c, 0.5, 9) == recolour_extra(c, 0.5, 9));
    CHECK_THROWS(recolour_extra(c, 1.5, 1));
    CHECK_THROWS(recolour_extra(c, -0.1, 1));

    // Double-P4-free 2-colouring of K_30 (a cograph split), recoloured.
    const auto host = Colouring::generate(30, 2, [](int u, int v) { return (u < 15) == (v < 15) ? 1 : 2; });
    REQUIRE(is_free(host, kDoubleP4));
    const auto r = recolour_extra(host, 0.5, 1);
    CHECK(r.s() == 3);
    CHECK(is_free(r, kDoubleP4));
    MESSAGE("h before " << homogeneous_number(host).value << ", after " << homogeneous_number(r).value);
  }

  TEST_CASE("random colourings") {
    const std::vector<int> one{1};
    CHECK(random_colouring(5, 2, one, 3) == Colouring::monochromatic(5, 2, 1));
    const std::vector<int> three{1, 2, 3};
    CHECK(random_colouring(10, 3, three, 0) == random_colouring(10, 3, three, 0));
    CHECK(random_colouring(10, 3, three, 0) != random_colouring(10, 3, three, 1));
    const std::vector<int> none;
    CHECK_THROWS(random_colouring(5, 2, none, 0));
    const std::vector<int> bad{4};
    CHECK_THROWS(random_colouring(5, 3, bad, 0));

    // Every colour is drawn roughly uniformly.
    const auto big = random_colouring(100, 3, three, 4);
    for (int col = 1; col <= 3; ++col) CHECK(std::abs(big.histogram()[col] - 1650) < 200);
  }

  TEST_CASE("Gallai product") {
    const auto g = gallai_product_c4(2, 0, 5);
    CHECK(g.product.n() == 8);
    CHECK(g.product.s() == 4);
    CHECK(is_free(g.product, kRainbow));
    for (int i = 0; i < 3; ++i) {
      // Factor i avoids colour i + 1 entirely.
      CHECK(g.factors[i].histogram()[i + 1] == 0);
      std::vector<int> I;
      for (int c = 1; c <= 4; ++c)
        if (c != i + 1) I.push_back(c);
      CHECK(s_clique(g.factors[i], I).value == 2);
      CHECK(g.factor_h[i] == restricted_h(g.factors[i], I));
    }

    const auto big = gallai_product_c4(4, 9, 20);
    CHECK(big.product.n() == 64);
    CHECK(is_free(big.product, kRainbow));
    int best = 0;
    for (int missing = 1; missing <= 4; ++missing) {
      std::vector<int> I;
      for (int c = 1; c <= 4; ++c)
        if (c != missing) I.push_back(c);
      long prod = 1;
      for (const auto& f : big.factors) prod *= s_clique(f, I).value;
      const int v = s_clique(big.product, I).value;
      CHECK(v == prod);
      best = std::max(best, v);
      // The factor that avoids `missing` contributes its whole blob.
      if (missing <= 3) CHECK(s_clique(big.factors[missing - 1], I).value == 4);
    }
    CHECK(homogeneous_number(big.product).value == best);
    CHECK(gallai_product_c4(3, 5, 4, 1).product == gallai_product_c4(3, 5, 4, 3).product);
  }

  TEST_CASE("K4-free host colouring") {
    const auto c4 = k4_free_host_colouring(4, 1);
    CHECK(host_graph(c4).edge_count() == 5);
    CHECK(is_free(c4, kDoubleP4));

    const auto c = k4_free_host_colouring(100, 5);
    const Graph h = host_graph(c);
    CHECK(clique_number(h) < 4);
    CHECK(clique_number(h) == 3);
    CHECK(is_free(c, kDoubleP4));
    MESSAGE("n=100 seed 5: alpha(H) = " << independence_number(h) << ", h_3 = " << homogeneous_number(c).value);

    // Every 4-set carries a colour-3 edge.
    const auto small = k4_free_host_colouring(14, 2);
    for (std::uint32_t m = 0; m < (1u << 14); ++m) {
      if (std::popcount(m) != 4) continue;
      const auto q = oracle::bits_of(m);
      bool has3 = false;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) has3 = has3 || small.colour(q[a], q[b]) == 3;
      REQUIRE(has3);
    }
    CHECK(oracle::clique(host_graph(small)) < 4);
    CHECK_THROWS(k4_free_host_colouring(3, 0));
  }
}
