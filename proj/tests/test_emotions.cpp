#include <random>
#include <stdexcept>

#include "doctest.h"
#include "humor/emotions.hpp"

using namespace humor;

TEST_CASE("simonov formula basics") {
  CHECK(simonov(1.0, 0.5, 0.5) == 0.0);
  CHECK(simonov(2.0, 0.9, 0.5) == doctest::Approx(0.8));
  CHECK(simonov(1.0, 0.2, 0.5) == doctest::Approx(-0.3));  // negative emotion
  CHECK_THROWS_AS(simonov(-1.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("simonov sign follows the information balance") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> uniform(-10.0, 10.0);
  std::uniform_real_distribution<double> need(0.0, 5.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double n = need(rng), info = uniform(rng), base = uniform(rng);
    double e = simonov(n, info, base);
    if (n > 0.0 && info > base) CHECK(e > 0.0);
    if (n > 0.0 && info < base) CHECK(e < 0.0);
    CHECK(2.0 * e == simonov(2.0 * n, info, base));  // exact scaling
    CHECK(simonov(n, info, base) + simonov(n, base, base) ==
          doctest::Approx(simonov(n, info, base)).epsilon(1e-12));
  }
}

TEST_CASE("simonov is additive in the information argument") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uniform(-4.0, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    double i1 = uniform(rng), i2 = uniform(rng), base = uniform(rng);
    CHECK(simonov(1.0, i1, base) + simonov(1.0, i2, base) ==
          doctest::Approx(simonov(1.0, i1 + i2, 2.0 * base)).epsilon(1e-9));
  }
}

TEST_CASE("emotion samples read the beam statistics") {
  EmotionConfig cfg;
  cfg.i0_pleasure = -2.0;

  EmotionSample at_baseline = sample_emotions(-2.0, std::nullopt, cfg);
  CHECK(at_baseline.pleasure == 0.0);
  CHECK(!at_baseline.confidence.has_value());  // no competitor

  EmotionSample with_rival = sample_emotions(-1.0, -2.0, cfg);
  REQUIRE(with_rival.confidence.has_value());
  CHECK(*with_rival.confidence == doctest::Approx(1.0));
  CHECK(with_rival.p_comp == -2.0);
}

TEST_CASE("confidence depends only on the score ratio") {
  EmotionConfig cfg;
  EmotionSample a = sample_emotions(-1.0, -2.5, cfg);
  EmotionSample b = sample_emotions(-1.0 + 3.0, -2.5 + 3.0, cfg);
  REQUIRE(a.confidence.has_value());
  REQUIRE(b.confidence.has_value());
  CHECK(*a.confidence == doctest::Approx(*b.confidence).epsilon(1e-12));
}
