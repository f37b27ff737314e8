#include <catch2/catch_amalgamated.hpp>

#include "distrl/fraction_set.hpp"

using namespace distrl;

TEST_CASE("fixed fractions cover the trivial and equidistant cases", "[fractions]") {
  SECTION("n = 1") {
    auto f = fixed_fractions(1);
    REQUIRE(f.boundaries() == std::vector<double>{0.0, 1.0});
    REQUIRE(f.midpoints() == std::vector<double>{0.5});
  }
  SECTION("n = 4 midpoints") {
    auto f = fixed_fractions(4);
    REQUIRE(f.midpoints() == std::vector<double>{0.125, 0.375, 0.625, 0.875});
  }
  SECTION("n = 7 midpoints are (2i+1)/14") {
    auto f = fixed_fractions(7);
    REQUIRE(f.size() == 7);
    for (int i = 0; i < 7; ++i)
      REQUIRE(f.midpoint(i) == Catch::Approx((2.0 * i + 1.0) / 14.0).margin(1e-15));
  }
  SECTION("n = 0 rejected") { REQUIRE_THROWS_AS(fixed_fractions(0), std::invalid_argument); }
}

TEST_CASE("sampled fractions respect endpoints and determinism", "[fractions]") {
  Rng rng(123);
  SECTION("n = 1 ignores the rng") {
    auto f = sample_fractions(1, rng);
    REQUIRE(f.boundaries() == std::vector<double>{0.0, 1.0});
  }
  SECTION("fixed seed reproduces the same set") {
    Rng a(42), b(42);
    auto fa = sample_fractions(3, a);
    auto fb = sample_fractions(3, b);
    REQUIRE(fa.boundaries() == fb.boundaries());
    REQUIRE(fa.midpoints() == fb.midpoints());
  }
  SECTION("draws are strictly increasing and interior") {
    for (int trial = 0; trial < 200; ++trial) {
      auto f = sample_fractions(1 + trial % 9, rng);
      const auto& b = f.boundaries();
      REQUIRE(b.front() == 0.0);
      REQUIRE(b.back() == 1.0);
      for (std::size_t i = 0; i + 1 < b.size(); ++i) REQUIRE(b[i] < b[i + 1]);
      for (int i = 0; i < f.size(); ++i)
        REQUIRE(f.midpoint(i) == 0.5 * (f.boundary(i) + f.boundary(i + 1)));
    }
  }
}

TEST_CASE("fractions from logits follow softmax cumulative sums", "[fractions]") {
  SECTION("equal logits give equidistant boundaries") {
    std::vector<double> logits{0.7, 0.7, 0.7, 0.7};
    auto f = fractions_from_logits(logits);
    REQUIRE(f.boundary(0) == 0.0);
    REQUIRE(f.boundary(1) == Catch::Approx(0.25).margin(1e-15));
    REQUIRE(f.boundary(2) == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(f.boundary(3) == Catch::Approx(0.75).margin(1e-15));
    REQUIRE(f.boundary(4) == 1.0);
  }
  SECTION("large logit gap concentrates the first interval") {
    std::vector<double> logits{10.0, 0.0};
    auto f = fractions_from_logits(logits);
    REQUIRE(f.boundary(1) > 0.9999);
    REQUIRE(f.boundary(1) < 1.0);
  }
  SECTION("hand-evaluated softmax: logits (0, 0, ln 2)") {
    std::vector<double> logits{0.0, 0.0, std::log(2.0)};
    auto f = fractions_from_logits(logits);
    REQUIRE(f.boundary(1) == Catch::Approx(0.25).margin(1e-12));
    REQUIRE(f.boundary(2) == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(f.boundary(3) == 1.0);
  }
  SECTION("non-finite logit rejected") {
    std::vector<double> logits{0.0, std::numeric_limits<double>::quiet_NaN()};
    REQUIRE_THROWS_AS(fractions_from_logits(logits), std::invalid_argument);
    logits[1] = std::numeric_limits<double>::infinity();
    REQUIRE_THROWS_AS(fractions_from_logits(logits), std::invalid_argument);
  }
  SECTION("extreme finite logits still produce a valid set") {
    std::vector<double> logits{800.0, -800.0, 0.0, 799.0};
    auto f = fractions_from_logits(logits);
    for (std::size_t i = 0; i + 1 < f.boundaries().size(); ++i)
      REQUIRE(f.boundaries()[i] < f.boundaries()[i + 1]);
  }
}

TEST_CASE("interval widths always partition [0,1]", "[fractions][property]") {
  Rng rng(7);
  auto check = [](const FractionSet& f) {
    double total = 0.0;
    for (int i = 0; i < f.size(); ++i) {
      REQUIRE(f.width(i) > 0.0);
      total += f.width(i);
    }
    REQUIRE(total == Catch::Approx(1.0).margin(1e-12));
  };
  for (int n : {1, 2, 7, 51, 100}) check(fixed_fractions(n));
  for (int trial = 0; trial < 50; ++trial) {
    check(sample_fractions(1 + trial % 12, rng));
    std::vector<double> logits(1 + trial % 12);
    for (auto& l : logits) l = rng.uniform(-5.0, 5.0);
    check(fractions_from_logits(logits));
  }
}
