#include "ghzlab/qsim.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace ghzlab {
namespace {

using testing::born_probability;

std::vector<EquatorialObservable> make_observables(const std::vector<double>& thetas) {
  std::vector<EquatorialObservable> obs;
  for (double t : thetas) {
    obs.emplace_back(t);
  }
  return obs;
}

TEST(PureStateTest, ValidatesDimensionAndNorm) {
  EXPECT_THROW(PureState({1.0}), std::invalid_argument);
  EXPECT_THROW(PureState({1.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(PureState({1.0, 1.0}), std::invalid_argument);
  EXPECT_NO_THROW(PureState({0.0, 1.0}));
  EXPECT_EQ(ghz_state().qubit_count(), 3);
  EXPECT_EQ(bell_state().qubit_count(), 2);
}

TEST(PureStateTest, BuiltinStatesHaveTheRightAmplitudes) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const PureState ghz = ghz_state();
  EXPECT_NEAR(ghz.amplitude(0).real(), inv_sqrt2, 1e-12);
  EXPECT_NEAR(std::abs(ghz.amplitude(2)), 0.0, 1e-12);
  EXPECT_NEAR(ghz.amplitude(7).real(), inv_sqrt2, 1e-12);
  const PureState bell = bell_state();
  EXPECT_NEAR(bell.amplitude(0).real(), inv_sqrt2, 1e-12);
  EXPECT_NEAR(std::abs(bell.amplitude(1)), 0.0, 1e-12);
  EXPECT_NEAR(bell.amplitude(3).real(), inv_sqrt2, 1e-12);
  EXPECT_THROW(bell.amplitude(4), std::out_of_range);
}

TEST(EquatorialObservableTest, NormalizesThetaAndReverses) {
  const double pi = std::numbers::pi;
  EXPECT_NEAR(EquatorialObservable(-pi / 2).theta(), 3 * pi / 2, 1e-12);
  EXPECT_NEAR(EquatorialObservable(5 * pi).theta(), pi, 1e-12);
  EXPECT_NEAR(pauli_x().reversed().theta(), pi, 1e-12);
  EXPECT_NEAR(pauli_y().theta(), pi / 2, 1e-12);
  EXPECT_NEAR(pauli_neg_y().theta(), 3 * pi / 2, 1e-12);
  EXPECT_THROW(EquatorialObservable(std::nan("")), std::invalid_argument);
}

// The declared-bit convention: measuring theta on its own +1 eigenvector
// (|0> + e^{i theta}|1>)/sqrt(2) yields bit 0 with certainty.
TEST(OutcomeDistributionTest, PlusOneEigenvectorYieldsBitZero) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 25; ++trial) {
    const double theta = angle(rng);
    const std::complex<double> phase(std::cos(theta), std::sin(theta));
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    PureState eigenvector({inv_sqrt2, inv_sqrt2 * phase});
    const auto obs = make_observables({theta});
    const auto dist = outcome_distribution(eigenvector, obs);
    EXPECT_NEAR(dist.probability(0u), 1.0, 1e-12);
    EXPECT_NEAR(dist.probability(1u), 0.0, 1e-12);
  }
}

TEST(OutcomeDistributionTest, SingleQubitZeroStateIsUnbiasedOnTheEquator) {
  PureState zero({1.0, 0.0});
  const auto dist = outcome_distribution(zero, make_observables({0.0}));
  EXPECT_NEAR(dist.probability(0u), 0.5, 1e-12);
  EXPECT_NEAR(dist.probability(1u), 0.5, 1e-12);
}

// <XXX> = +1 on the GHZ state: the mass sits uniformly on the even-parity
// outcomes. <YYX> = -1: uniformly on the odd ones.
TEST(OutcomeDistributionTest, GhzStabilizerMeasurements) {
  const auto xxx = outcome_distribution(ghz_state(), make_observables({0.0, 0.0, 0.0}));
  const double half_pi = std::numbers::pi / 2;
  const auto yyx = outcome_distribution(ghz_state(), make_observables({half_pi, half_pi, 0.0}));
  for (unsigned k = 0; k < 8; ++k) {
    const bool even = std::popcount(k) % 2 == 0;
    EXPECT_NEAR(xxx.probability(k), even ? 0.25 : 0.0, 1e-12);
    EXPECT_NEAR(yyx.probability(k), even ? 0.0 : 0.25, 1e-12);
  }
  EXPECT_NEAR(parity_bias(ghz_state(), make_observables({0.0, 0.0, 0.0})), 1.0, 1e-12);
  EXPECT_NEAR(parity_bias(ghz_state(), make_observables({0.0, half_pi, half_pi})), -1.0, 1e-12);
}

TEST(OutcomeDistributionTest, RejectsObservableCountMismatch) {
  EXPECT_THROW(outcome_distribution(ghz_state(), make_observables({0.0, 0.0})),
               std::invalid_argument);
  EXPECT_THROW(outcome_distribution(bell_state(), make_observables({0.0, 0.0, 0.0})),
               std::invalid_argument);
}

TEST(OutcomeDistributionTest, MatchesDenseProjectorOracleOnGhz) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const PureState state = ghz_state();
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> thetas = {angle(rng), angle(rng), angle(rng)};
    const auto dist = outcome_distribution(state, make_observables(thetas));
    ASSERT_EQ(dist.size(), 8u);
    for (unsigned k = 0; k < 8; ++k) {
      EXPECT_NEAR(dist.probability(k), born_probability(state, thetas, k), 1e-12);
    }
  }
}

TEST(OutcomeDistributionTest, MatchesDenseProjectorOracleOnBell) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const PureState state = bell_state();
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> thetas = {angle(rng), angle(rng)};
    const auto dist = outcome_distribution(state, make_observables(thetas));
    ASSERT_EQ(dist.size(), 4u);
    for (unsigned k = 0; k < 4; ++k) {
      EXPECT_NEAR(dist.probability(k), born_probability(state, thetas, k), 1e-12);
    }
  }
}

TEST(OutcomeDistributionTest, NormalizedAndNonnegativeOnRandomAngles) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 100; ++trial) {
    const PureState state = trial % 2 == 0 ? ghz_state() : bell_state();
    std::vector<double> thetas(static_cast<std::size_t>(state.qubit_count()));
    for (double& t : thetas) {
      t = angle(rng);
    }
    const auto dist = outcome_distribution(state, make_observables(thetas));
    double total = 0.0;
    for (unsigned k = 0; k < dist.size(); ++k) {
      EXPECT_GE(dist.probability(k), 0.0);
      total += dist.probability(k);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

// On the GHZ state the parity bias of equatorial measurements collapses to
// the cosine of the angle sum.
TEST(ParityBiasTest, GhzEqualsCosineOfAngleSum) {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 100; ++trial) {
    const double t1 = angle(rng);
    const double t2 = angle(rng);
    const double t3 = angle(rng);
    const double bias = parity_bias(ghz_state(), make_observables({t1, t2, t3}));
    EXPECT_NEAR(bias, std::cos(t1 + t2 + t3), 1e-12);
  }
}

TEST(ParityBiasTest, BellEqualsCosineOfAngleSum) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 100; ++trial) {
    const double t1 = angle(rng);
    const double t2 = angle(rng);
    const double bias = parity_bias(bell_state(), make_observables({t1, t2}));
    EXPECT_NEAR(bias, std::cos(t1 + t2), 1e-12);
  }
}

TEST(ParityBiasTest, MatchesSignedSumOfDistribution) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> thetas = {angle(rng), angle(rng), angle(rng)};
    const auto obs = make_observables(thetas);
    const auto dist = outcome_distribution(ghz_state(), obs);
    double signed_sum = 0.0;
    for (unsigned k = 0; k < dist.size(); ++k) {
      signed_sum += (std::popcount(k) % 2 == 0 ? 1.0 : -1.0) * dist.probability(k);
    }
    EXPECT_NEAR(parity_bias(ghz_state(), obs), signed_sum, 1e-12);
  }
}

// Measuring along the opposite Bloch direction flips the declared bit, so
// reversing one observable negates the parity bias.
TEST(ParityBiasTest, ReversingOneObservableNegatesTheBias) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<EquatorialObservable> obs = {EquatorialObservable(angle(rng)),
                                             EquatorialObservable(angle(rng)),
                                             EquatorialObservable(angle(rng))};
    const double bias = parity_bias(ghz_state(), obs);
    auto flipped = obs;
    flipped[static_cast<std::size_t>(trial % 3)] =
        obs[static_cast<std::size_t>(trial % 3)].reversed();
    EXPECT_NEAR(parity_bias(ghz_state(), flipped), -bias, 1e-12);
  }
}

// X (x) X on the Bell state has probability 1/2 on outcomes 00 and 11 and 0
// elsewhere; the inverse-CDF draw must never land on the null outcomes.
TEST(DrawOutcomeTest, SkipsZeroProbabilityOutcomes) {
  const auto obs = make_observables({0.0, 0.0});
  const auto dist = outcome_distribution(bell_state(), obs);
  ASSERT_NEAR(dist.probability(0u), 0.5, 1e-12);
  ASSERT_NEAR(dist.probability(3u), 0.5, 1e-12);
  ASSERT_NEAR(dist.probability(1u), 0.0, 1e-12);
  ASSERT_NEAR(dist.probability(2u), 0.0, 1e-12);
  for (int i = 0; i < 1000; ++i) {
    const double u = static_cast<double>(i) / 1000.0;
    const unsigned outcome = draw_outcome(dist, u);
    EXPECT_TRUE(outcome == 0u || outcome == 3u);
  }
  EXPECT_EQ(draw_outcome(dist, 0.0), 0u);
  EXPECT_EQ(draw_outcome(dist, 0.499999), 0u);
  EXPECT_EQ(draw_outcome(dist, 0.500001), 3u);
}

TEST(SampleOutcomesTest, DeterministicCompleteAndConsistent) {
  const auto obs = make_observables({0.0, std::numbers::pi / 2, std::numbers::pi / 2});
  const auto first = sample_outcomes(ghz_state(), obs, 4096, 99);
  const auto second = sample_outcomes(ghz_state(), obs, 4096, 99);
  EXPECT_EQ(first, second);

  std::uint64_t total = 0;
  for (const auto& [outcome, count] : first) {
    EXPECT_EQ(outcome.size(), 3);
    total += count;
  }
  EXPECT_EQ(first.size(), 8u);
  EXPECT_EQ(total, 4096u);

  // X (x) Y (x) Y has bias cos(pi) = -1: only odd-parity outcomes occur.
  for (const auto& [outcome, count] : first) {
    int parity = 0;
    for (int i = 0; i < outcome.size(); ++i) {
      parity ^= outcome.bit(i);
    }
    if (parity == 0) {
      EXPECT_EQ(count, 0u);
    }
  }
}

TEST(SampleOutcomesTest, DifferentSeedsDiffer) {
  const auto obs = make_observables({1.0, 2.0, 3.0});
  const auto a = sample_outcomes(ghz_state(), obs, 2048, 1);
  const auto b = sample_outcomes(ghz_state(), obs, 2048, 2);
  EXPECT_NE(a, b);
}

TEST(SampleOutcomesTest, RejectsZeroShots) {
  const auto obs = make_observables({0.0, 0.0, 0.0});
  EXPECT_THROW(sample_outcomes(ghz_state(), obs, 0, 1), std::invalid_argument);
}

TEST(SampleOutcomesTest, FrequenciesConcentrateAroundTheDistribution) {
  PureState zero({1.0, 0.0});
  const auto obs = make_observables({0.0});
  const auto counts = sample_outcomes(zero, obs, 10000, 5);
  const double frequency = static_cast<double>(counts.at(BitString{0})) / 10000.0;
  EXPECT_NEAR(frequency, 0.5, 0.02);
}

}  // namespace
}  // namespace ghzlab
