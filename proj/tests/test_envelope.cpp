#include <catch2/catch_amalgamated.hpp>

#include "hydrolim/envelope.hpp"
#include "hydrolim/rng.hpp"

using namespace hydrolim;

namespace {

// the 2-step exclusion flux
FluxFunction g2() { return FluxFunction::polynomial({0.0, 1.0, 1.0, -2.0}, 1.0); }

// dense-grid monotone-chain hull oracle, independent of ConvexEnvelope
std::vector<std::pair<double, double>> hull_oracle(const FluxFunction& g, double lo, double hi,
                                                   int n, bool lower) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i <= n; ++i) {
    double x = lo + (hi - lo) * i / n;
    pts.emplace_back(x, (lower ? 1.0 : -1.0) * g(x));
  }
  std::vector<std::pair<double, double>> hull;
  for (auto& p : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      if ((b.first - a.first) * (p.second - a.second) -
              (b.second - a.second) * (p.first - a.first) <=
          0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  for (auto& p : hull) p.second *= lower ? 1.0 : -1.0;
  return hull;
}

double hull_oracle_value(const std::vector<std::pair<double, double>>& hull, double x) {
  for (size_t i = 1; i < hull.size(); ++i)
    if (x <= hull[i].first) {
      double t = (x - hull[i - 1].first) / (hull[i].first - hull[i - 1].first);
      return hull[i - 1].second + t * (hull[i].second - hull[i - 1].second);
    }
  return hull.back().second;
}

FluxFunction random_poly_flux(uint64_t i) {
  // random cubic or quartic pinned to G(0) = 0
  int deg = 3 + static_cast<int>(rng::below(99, i, 0, 2));
  std::vector<double> c(static_cast<size_t>(deg) + 1, 0.0);
  for (int d = 1; d <= deg; ++d) c[static_cast<size_t>(d)] = 4.0 * rng::u01(99, i, 10 + d) - 2.0;
  return FluxFunction::polynomial(std::move(c), 1.0);
}

}  // namespace

TEST_CASE("convex flux keeps its own graph as envelope") {
  FluxFunction g = FluxFunction::polynomial({0.0, 0.0, 1.0}, 1.0);  // u^2
  ConvexEnvelope env(g, 0.1, 0.9, EnvelopeSide::lower);
  for (double u : {0.15, 0.4, 0.77}) CHECK(env.value(u) == Catch::Approx(g(u)).margin(1e-8));
  CHECK(env.kinks().empty());
  CHECK(env.flat_pieces().empty());
}

TEST_CASE("two-step flux: convex part is [0, 1/6)") {
  FluxFunction g = g2();
  // G_2'' = 2 - 12u changes sign at exactly 1/6
  CHECK(g.second_derivative(1.0 / 6.0) == Catch::Approx(0.0).margin(1e-12));
  CHECK(g.second_derivative(0.1) > 0);
  CHECK(g.second_derivative(0.2) < 0);
  // on [0, 1/6] the envelope follows the graph
  ConvexEnvelope env(g, 0.0, 1.0 / 6.0, EnvelopeSide::lower);
  for (double u : {0.02, 0.08, 0.15}) CHECK(env.value(u) == Catch::Approx(g(u)).margin(1e-8));
}

TEST_CASE("hull of G_2 on [0, 0.5] matches the dense-grid oracle") {
  FluxFunction g = g2();
  ConvexEnvelope env(g, 0.0, 0.5, EnvelopeSide::lower);
  auto oracle = hull_oracle(g, 0.0, 0.5, 5000, true);
  for (int i = 0; i <= 200; ++i) {
    double u = 0.5 * i / 200.0;
    CHECK(env.value(u) == Catch::Approx(hull_oracle_value(oracle, u)).margin(1e-6));
  }
  // the flat chord bridges the concave region: tangent point, then straight
  auto flats = env.flat_pieces();
  REQUIRE(flats.size() == 1);
  CHECK(flats[0].density_hi == Catch::Approx(0.5));
}

TEST_CASE("envelope oracle equivalence on random polynomial fluxes") {
  // 100 random cubic/quartic fluxes, sup-norm agreement within 1e-6
  for (uint64_t i = 0; i < 100; ++i) {
    FluxFunction g = random_poly_flux(i);
    double a = rng::u01(7, i, 1), b = rng::u01(7, i, 2);
    double lo = std::min(a, b), hi = std::max(a, b);
    if (hi - lo < 1e-3) hi = lo + 1e-3;
    ConvexEnvelope env(g, lo, hi, EnvelopeSide::lower);
    auto oracle = hull_oracle(g, lo, hi, 10000, true);
    double worst = 0;
    for (int j = 0; j <= 500; ++j) {
      double u = lo + (hi - lo) * j / 500.0;
      worst = std::max(worst, std::fabs(env.value(u) - hull_oracle_value(oracle, u)));
    }
    CHECK(worst < 1e-6);
  }
}

TEST_CASE("upper envelope mirrors the lower one") {
  FluxFunction g = g2();
  ConvexEnvelope up(g, 0.9, 0.2, EnvelopeSide::upper);
  auto oracle = hull_oracle(g, 0.2, 0.9, 10000, false);
  for (int j = 0; j <= 300; ++j) {
    double u = 0.2 + 0.7 * j / 300.0;
    CHECK(up.value(u) == Catch::Approx(hull_oracle_value(oracle, u)).margin(1e-6));
  }
  // slopes run downhill for the upper side
  for (size_t j = 1; j < up.edge_count(); ++j) CHECK(up.slope(j) <= up.slope(j - 1) + 1e-12);
}

TEST_CASE("degenerate interval") {
  FluxFunction g = g2();
  ConvexEnvelope env(g, 0.3, 0.3, EnvelopeSide::lower);
  CHECK(env.edge_count() == 0);
  CHECK(env.value(0.3) == Catch::Approx(g(0.3)));
}

TEST_CASE("table flux envelope is exact on breakpoints") {
  // piecewise-linear flux dipping below the end-to-end chord at 0.5
  FluxFunction g = FluxFunction::table({0.0, 0.25, 0.5, 0.75, 1.0}, {0.0, 0.3, 0.05, 0.4, 0.2});
  ConvexEnvelope env(g, 0.0, 1.0, EnvelopeSide::lower);
  // lower hull of the five points: (0,0) -> (0.5,0.05) -> (1,0.2)
  CHECK(env.value(0.5) == Catch::Approx(0.05));
  CHECK(env.value(0.25) == Catch::Approx(0.025));
  CHECK(env.value(0.75) == Catch::Approx(0.125));
}
