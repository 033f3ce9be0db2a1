#include <catch2/catch_amalgamated.hpp>

#include "hydrolim/config.hpp"

using namespace hydrolim;

TEST_CASE("configuration invariants") {
  Configuration c(-3, 3, 2, Periodic{});
  CHECK(c.size() == 7);
  CHECK(c.total_particles() == 0);
  c.set(0, 2);
  CHECK_THROWS_AS(c.set(0, 3), std::out_of_range);
  CHECK_THROWS_AS(c.set(0, -1), std::out_of_range);
  CHECK(c.wrap(4) == -3);
  CHECK(c.wrap(-4) == 3);
  CHECK_THROWS_AS(Configuration(2, 1, 1, Periodic{}), std::invalid_argument);
  CHECK_THROWS_AS(Configuration(0, 1, 1, ConstantTails{-0.1, 0.0}), std::invalid_argument);
}

TEST_CASE("coordinatewise order") {
  Configuration a(0, 2, 2, Periodic{});
  Configuration b(0, 2, 2, Periodic{});
  SECTION("reflexive") { CHECK(leq(a, a)); }
  SECTION("all-zero below all-K") {
    for (int64_t x = 0; x <= 2; ++x) b.set(x, 2);
    CHECK(leq(a, b));
    CHECK_FALSE(leq(b, a));
  }
  SECTION("crossing occupancies incomparable both ways") {
    a.set(0, 2);
    b.set(1, 2);
    CHECK_FALSE(leq(a, b));
    CHECK_FALSE(leq(b, a));
  }
  SECTION("partial order: antisymmetry and transitivity, exhaustive on 3 sites") {
    // all pairs of {0,1}^3 configurations
    auto make = [](int bits) {
      Configuration c(0, 2, 1, Periodic{});
      for (int64_t x = 0; x < 3; ++x) c.set(x, (bits >> x) & 1);
      return c;
    };
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        if (leq(make(i), make(j)) && leq(make(j), make(i))) CHECK(i == j);
        for (int k = 0; k < 8; ++k)
          if (leq(make(i), make(j)) && leq(make(j), make(k))) CHECK(leq(make(i), make(k)));
      }
  }
  SECTION("mismatched windows rejected") {
    Configuration w(0, 3, 2, Periodic{});
    CHECK_THROWS_AS(leq(a, w), std::invalid_argument);
  }
}

TEST_CASE("empirical measure") {
  SECTION("empty configuration gives the zero profile") {
    Configuration c(-5, 5, 1, Periodic{});
    Profile p = empirical_measure(c, 4);
    CHECK(p.front_count() == 0);
    CHECK(p.left_tail() == 0.0);
  }
  SECTION("full configuration gives constant K on the rescaled window") {
    Configuration c(0, 9, 3, Periodic{});
    for (int64_t x = 0; x <= 9; ++x) c.set(x, 3);
    Profile p = empirical_measure(c, 10);
    CHECK(p.value_at(0.05) == 3.0);
    CHECK(p.value_at(0.95) == 3.0);
    CHECK(p.value_at(1.05) == 0.0);
    CHECK(p.integral(-1, 2) == Catch::Approx(30.0 / 10.0));
  }
  SECTION("single particle at site 3, N = 2: unit step on [1.5, 2.0)") {
    Configuration c(0, 7, 1, Periodic{});
    c.set(3, 1);
    Profile p = empirical_measure(c, 2);
    CHECK(p.value_at(1.49) == 0.0);
    CHECK(p.value_at(1.5) == 1.0);
    CHECK(p.value_at(1.99) == 1.0);
    CHECK(p.value_at(2.0) == 0.0);
  }
  SECTION("mass times N equals the particle count exactly") {
    Configuration c(-4, 17, 2, Periodic{});
    for (int64_t x = -4; x <= 17; ++x) c.set(x, static_cast<int>((x * x + 7) % 3));
    Profile p = empirical_measure(c, 7);
    CHECK(p.integral(-10, 10) * 7 == Catch::Approx(double(c.total_particles())));
    CHECK(empirical_measure(c, 1).integral(-10, 30) ==
          Catch::Approx(double(c.total_particles())));
  }
  SECTION("N must be positive") {
    Configuration c(0, 1, 1, Periodic{});
    CHECK_THROWS_AS(empirical_measure(c, 0), std::invalid_argument);
  }
}
