#include <catch2/catch_amalgamated.hpp>

#include "hydrolim/profile.hpp"
#include "hydrolim/rng.hpp"

using namespace hydrolim;

namespace {

// independent oracle: sample both step functions on a fine grid and take the
// running cumulative of the difference
double delta_grid_oracle(const Profile& u, const Profile& v, double lo, double hi, int n) {
  double best = 0, cum = 0;
  double h = (hi - lo) / n;
  for (int i = 0; i < n; ++i) {
    double x = lo + (i + 0.5) * h;
    cum += (u.value_at(x) - v.value_at(x)) * h;
    best = std::max(best, std::fabs(cum));
  }
  return best;
}

// partition-sup oracle for total variation of a step function
double tv_grid_oracle(const Profile& u, double lo, double hi, int n) {
  double tv = 0;
  double prev = u.value_at(lo);
  for (int i = 1; i <= n; ++i) {
    double x = lo + (hi - lo) * i / n;
    tv += std::fabs(u.value_at(x) - prev);
    prev = u.value_at(x);
  }
  return tv;
}

Profile random_profile(uint64_t seed, uint64_t idx, int max_fronts, double tail) {
  int n = 1 + static_cast<int>(rng::below(seed, idx, 50, max_fronts));
  std::vector<double> pos, val;
  val.push_back(tail);
  double x = -5.0;
  for (int i = 0; i < n; ++i) {
    x += 0.05 + 3.0 * rng::u01(seed, idx, 100 + i);
    pos.push_back(x);
    val.push_back(2.0 * rng::u01(seed, idx, 200 + i));
  }
  val.back() = tail;  // equal tails so Delta is defined
  if (n == 1) {
    pos.push_back(x + 1.0);
    val.push_back(tail);
  }
  return Profile(std::move(pos), std::move(val));
}

}  // namespace

TEST_CASE("profile basics") {
  Profile u({0.0, 1.0}, {0.0, 2.0, 0.0});
  CHECK(u.value_at(-0.5) == 0.0);
  CHECK(u.value_at(0.0) == 2.0);
  CHECK(u.value_at(0.999) == 2.0);
  CHECK(u.value_at(1.0) == 0.0);
  CHECK(u.integral(-1.0, 3.0) == Catch::Approx(2.0));
  CHECK_THROWS_AS(Profile({1.0, 1.0}, {0., 1., 0.}), std::invalid_argument);
}

TEST_CASE("total variation") {
  SECTION("constant profile has zero variation") {
    CHECK(Profile(0.7).total_variation() == 0.0);
  }
  SECTION("Riemann step") {
    Profile r({0.0}, {0.9, 0.2});
    CHECK(r.total_variation() == Catch::Approx(0.7));
  }
  SECTION("staircase 0 -> 1 -> 0 against partition-sup oracle") {
    Profile s({0.0, 1.0}, {0.0, 1.0, 0.0});
    CHECK(s.total_variation() == Catch::Approx(2.0));
    CHECK(s.total_variation() == Catch::Approx(tv_grid_oracle(s, -1, 2, 30000)));
  }
  SECTION("random profiles match the oracle") {
    for (uint64_t i = 0; i < 20; ++i) {
      Profile u = random_profile(7, i, 8, 0.0);
      CHECK(u.total_variation() ==
            Catch::Approx(tv_grid_oracle(u, -6, 40, 400000)).margin(1e-9));
    }
  }
}

TEST_CASE("delta distance") {
  SECTION("identity") {
    Profile u({0.0, 2.0}, {0.0, 1.5, 0.0});
    CHECK(delta_distance(u, u) == 0.0);
  }
  SECTION("shifted indicators: Delta = 0.5") {
    Profile u({0.0, 1.0}, {0.0, 1.0, 0.0});
    Profile v({0.5, 1.5}, {0.0, 1.0, 0.0});
    CHECK(delta_distance(u, v) == Catch::Approx(0.5));
    CHECK(delta_distance(u, v) ==
          Catch::Approx(delta_grid_oracle(u, v, -1, 3, 400000)).epsilon(1e-3));
  }
  SECTION("unequal tails rejected") {
    Profile u({0.0}, {0.0, 1.0});
    Profile v(Profile(0.0));
    CHECK_THROWS_AS(delta_distance(u, v), std::invalid_argument);
  }
  SECTION("symmetry and triangle inequality on random front lists") {
    for (uint64_t i = 0; i < 30; ++i) {
      Profile a = random_profile(11, 3 * i, 6, 0.5);
      Profile b = random_profile(11, 3 * i + 1, 6, 0.5);
      Profile c = random_profile(11, 3 * i + 2, 6, 0.5);
      double ab = delta_distance(a, b);
      double ba = delta_distance(b, a);
      double ac = delta_distance(a, c);
      double cb = delta_distance(c, b);
      CHECK(ab == Catch::Approx(ba));
      CHECK(ab >= 0.0);
      CHECK(ab <= ac + cb + 1e-12);
      CHECK(ab == Catch::Approx(delta_grid_oracle(a, b, -7, 45, 800000)).margin(2e-3));
    }
  }
  SECTION("nonzero equal tails are allowed") {
    Profile u({0.0, 1.0}, {0.5, 1.0, 0.5});
    Profile v(Profile(0.5));
    CHECK(delta_distance(u, v) == Catch::Approx(0.5));
  }
}

TEST_CASE("restriction to a window") {
  Profile u({-2.0, 3.0}, {1.0, 0.25, 1.0});
  Profile r = u.restricted(-1.0, 2.0);
  CHECK(r.left_tail() == 0.0);
  CHECK(r.right_tail() == 0.0);
  CHECK(r.value_at(0.0) == 0.25);
  CHECK(r.value_at(-1.5) == 0.0);
  CHECK(r.integral(-1.0, 2.0) == Catch::Approx(u.integral(-1.0, 2.0)));
}
