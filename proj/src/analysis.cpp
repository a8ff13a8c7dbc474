#include "ehlab/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace ehlab {

namespace {

double exp2_clamped(long double log2_value) {
  if (log2_value > 1023.0L) return HUGE_VAL;
  if (log2_value < -1074.0L) return 0.0;
  return static_cast<double>(std::exp2(log2_value));
}

}  // namespace

TuranBound turan_min_edges(std::int64_t q, std::int64_t alpha) {
  if (q < 1 || alpha < 1) throw std::invalid_argument("turan_min_edges: q and alpha must be positive");
  if (q > (std::int64_t{1} << 31)) throw std::invalid_argument("turan_min_edges: q too large");
  TuranBound t{q, alpha, 0, 0, 0.0};
  const std::int64_t base = q / alpha;
  const std::int64_t big = q % alpha;  // parts of size base + 1
  t.exact = big * ((base + 1) * base / 2) + (alpha - big) * (base * (base - 1) / 2);
  const std::int64_t pairs = q * (q - 1) / 2;
  t.binomial_over_alpha = (pairs + alpha - 1) / alpha;
  t.quarter_form = static_cast<double>(q) * static_cast<double>(q) / (4.0 * static_cast<double>(alpha));
  return t;
}

double RecolourBound::bound() const { return exp2_clamped(log2_bound); }

RecolourBound recolour_failure_bound(long double n, long double h, long double xi) {
  if (!(n >= 2)) throw std::invalid_argument("recolour_failure_bound: n must be at least 2");
  if (!(h >= 1)) throw std::invalid_argument("recolour_failure_bound: h must be at least 1");
  if (!(xi > 0 && xi < 1)) throw std::invalid_argument("recolour_failure_bound: xi must lie in (0, 1)");
  RecolourBound r;
  r.n = n;
  r.h = h;
  r.xi = xi;
  const long double log_n = std::log2(n);
  r.set_size = std::pow(h, 1 + xi);
  r.forced = std::pow(h, 1 + 2 * xi);
  r.log2_bound = r.set_size * log_n - r.forced;
  r.bite_threshold = std::pow(log_n, 2 / xi);
  r.bite_regime = h > r.bite_threshold;
  r.vacuous = r.log2_bound >= 0;
  return r;
}

std::int64_t recolour_threshold(long double n, long double xi) {
  // The exponent is negative iff h^xi > log n.
  const long double log_n = std::log2(n);
  auto bites = [&](std::int64_t h) {
    return recolour_failure_bound(n, static_cast<long double>(h), xi).log2_bound < 0;
  };
  auto h = static_cast<std::int64_t>(std::floor(std::pow(log_n, 1 / xi)));
  if (h < 1) h = 1;
  while (h > 1 && bites(h - 1)) --h;
  while (!bites(h)) ++h;
  return h;
}

double ConstructionBound::bound() const { return exp2_clamped(log2_bound); }

ConstructionBound construction_failure_bound(long double n, long double alpha_h) {
  if (!(n >= 2)) throw std::invalid_argument("construction_failure_bound: n must be at least 2");
  if (!(alpha_h >= 1)) throw std::invalid_argument("construction_failure_bound: alpha must be at least 1");
  ConstructionBound r;
  r.n = n;
  r.alpha_h = alpha_h;
  const long double log_n = std::log2(n);
  r.q = 8 * alpha_h * log_n;
  r.edges = r.q * r.q / (4 * alpha_h);
  r.log2_p_x = 1 - r.edges;
  // C(n, q) <= n^q.
  r.log2_bound = r.q * log_n + r.log2_p_x;
  r.log2_bound_closed = 1 - 8 * alpha_h * log_n * log_n;
  r.vacuous = r.log2_bound >= 0;
  return r;
}

}  // namespace ehlab
