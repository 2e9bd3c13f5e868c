#include "ghzlab/games.hpp"

#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ghzlab/rational.hpp"
#include "oracles.hpp"

namespace ghzlab {
namespace {

TEST(WinningBitTest, MatchesBranchOracleOnAllInputs) {
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        for (int r1 = 0; r1 < 2; ++r1) {
          EXPECT_EQ(winning_bit(x, y, z, r1), testing::branch_winning_bit(x, y, z, r1));
        }
      }
    }
  }
}

TEST(PromiseInputsTest, CountsAndPromises) {
  EXPECT_EQ(promise_inputs(GameId::GhzE).size(), 4u);
  EXPECT_EQ(promise_inputs(GameId::GhzO).size(), 4u);
  EXPECT_EQ(promise_inputs(GameId::Rghz).size(), 8u);
  EXPECT_EQ(promise_inputs(GameId::R2ghz).size(), 16u);
  EXPECT_EQ(promise_inputs(GameId::Chsh).size(), 4u);

  for (const auto& in : promise_inputs(GameId::GhzE)) {
    EXPECT_EQ(in.x ^ in.y ^ *in.z, 0);
    EXPECT_FALSE(in.r1.has_value());
  }
  for (const auto& in : promise_inputs(GameId::GhzO)) {
    EXPECT_EQ(in.x ^ in.y ^ *in.z, 1);
  }
  for (const auto& in : promise_inputs(GameId::Rghz)) {
    EXPECT_EQ(in.x ^ in.y ^ *in.z, *in.r1);
    EXPECT_FALSE(in.r2.has_value());
  }
  int r2_high = 0;
  for (const auto& in : promise_inputs(GameId::R2ghz)) {
    EXPECT_EQ(in.x ^ in.y ^ *in.z, *in.r1);
    r2_high += *in.r2;
  }
  EXPECT_EQ(r2_high, 8);
  for (const auto& in : promise_inputs(GameId::Chsh)) {
    EXPECT_FALSE(in.z.has_value());
  }
}

TEST(PromiseInputsTest, TargetParityFollowsTheGame) {
  for (const auto& in : promise_inputs(GameId::GhzE)) {
    EXPECT_EQ(target_parity(GameId::GhzE, in), in.x | in.y | *in.z);
  }
  for (const auto& in : promise_inputs(GameId::GhzO)) {
    EXPECT_EQ(target_parity(GameId::GhzO, in), in.x & in.y & *in.z);
  }
  for (const auto& in : promise_inputs(GameId::Rghz)) {
    EXPECT_EQ(target_parity(GameId::Rghz, in),
              testing::branch_winning_bit(in.x, in.y, *in.z, *in.r1));
  }
  for (const auto& in : promise_inputs(GameId::R2ghz)) {
    EXPECT_EQ(target_parity(GameId::R2ghz, in),
              testing::branch_winning_bit(in.x, in.y, *in.z, *in.r1));
  }
  for (const auto& in : promise_inputs(GameId::Chsh)) {
    EXPECT_EQ(target_parity(GameId::Chsh, in), in.x & in.y);
  }
}

TEST(PromiseInputsTest, OffPromiseInputsAreRejected) {
  GameInput bad;
  bad.x = 1;
  bad.y = 0;
  bad.z = 0;
  EXPECT_THROW(target_parity(GameId::GhzE, bad), std::invalid_argument);
  bad.z = 1;
  EXPECT_THROW(target_parity(GameId::GhzO, bad), std::invalid_argument);
  bad.r1 = 1;
  EXPECT_THROW(target_parity(GameId::Rghz, bad), std::invalid_argument);
  GameInput missing;
  missing.x = 0;
  missing.y = 0;
  EXPECT_THROW(target_parity(GameId::GhzE, missing), std::invalid_argument);
}

TEST(PartyViewsTest, RoutingOfTheHiddenBits) {
  GameInput in;
  in.x = 1;
  in.y = 0;
  in.z = 0;
  in.r1 = 1;
  const auto rghz_views = party_views(GameId::Rghz, in);
  ASSERT_EQ(rghz_views.size(), 3u);
  EXPECT_EQ(rghz_views[0].bits, (BitString{1, 1}));  // (x, r1)
  EXPECT_EQ(rghz_views[1].bits, (BitString{0}));     // (y)
  EXPECT_EQ(rghz_views[2].bits, (BitString{0}));     // (z)

  in.r2 = 0;
  auto views = party_views(GameId::R2ghz, in);
  EXPECT_EQ(views[0].bits, (BitString{1, 0, 1}));  // (x, r2, r1 & !r2)
  EXPECT_EQ(views[1].bits, (BitString{0, 0, 0}));  // (y, r2, r1 & r2)
  EXPECT_EQ(views[2].bits, (BitString{0}));        // (z)

  in.r2 = 1;
  views = party_views(GameId::R2ghz, in);
  EXPECT_EQ(views[0].bits, (BitString{1, 1, 0}));
  EXPECT_EQ(views[1].bits, (BitString{0, 1, 1}));
  EXPECT_EQ(views[2].bits, (BitString{0}));

  GameInput ghz;
  ghz.x = 0;
  ghz.y = 1;
  ghz.z = 1;
  const auto ghz_views = party_views(GameId::GhzE, ghz);
  EXPECT_EQ(ghz_views[0].bits, (BitString{0}));
  EXPECT_EQ(ghz_views[1].bits, (BitString{1}));
  EXPECT_EQ(ghz_views[2].bits, (BitString{1}));
}

TEST(ClassicalPlayTest, HandComputableStrategiesScoreExactly) {
  // Answering all zeros wins GhzE only on the all-zero input.
  ClassicalStrategy zeros{{TruthTable(1, 0), TruthTable(1, 0), TruthTable(1, 0)}};
  EXPECT_EQ(play_classical(GameId::GhzE, zeros), Rational(1, 4));
  // a = !x, b = y, c = z reaches the optimum on GhzE.
  ClassicalStrategy not_x{{TruthTable(1, 0b01), TruthTable(1, 0b10), TruthTable(1, 0b10)}};
  EXPECT_EQ(play_classical(GameId::GhzE, not_x), Rational(3, 4));
}

// Spot-check the published observable assignments: the odd-game Alice
// measures the reversed Y direction on view 0, and every plain party maps
// view bit 0 to X and 1 to Y.
TEST(BuiltinStrategyTest, ObservableAngleSpotChecks) {
  const double pi = std::numbers::pi;
  const QuantumStrategy table1_o = builtin_quantum_strategy(BuiltinStrategy::Table1O);
  EXPECT_NEAR(table1_o.assignment[0].at(BitString{0}).theta(), 3 * pi / 2, 1e-12);
  EXPECT_NEAR(table1_o.assignment[0].at(BitString{1}).theta(), 0.0, 1e-12);
  const QuantumStrategy table1_e = builtin_quantum_strategy(BuiltinStrategy::Table1E);
  EXPECT_NEAR(table1_e.assignment[1].at(BitString{1}).theta(), pi / 2, 1e-12);
  EXPECT_NEAR(table1_e.assignment[2].at(BitString{0}).theta(), 0.0, 1e-12);
  const QuantumStrategy chsh = builtin_quantum_strategy(BuiltinStrategy::ChshCalibration);
  EXPECT_NEAR(chsh.assignment[0].at(BitString{0}).theta(), 0.0, 1e-12);
  EXPECT_NEAR(chsh.assignment[0].at(BitString{1}).theta(), pi / 2, 1e-12);
  EXPECT_NEAR(chsh.assignment[1].at(BitString{0}).theta(), 7 * pi / 4, 1e-12);
  EXPECT_NEAR(chsh.assignment[1].at(BitString{1}).theta(), pi / 4, 1e-12);
}

TEST(QuantumStrategyTest, Table1EIsPerfectOnGhzE) {
  const auto value = play_quantum(GameId::GhzE, builtin_quantum_strategy(BuiltinStrategy::Table1E));
  ASSERT_EQ(value.per_input.size(), 4u);
  for (double p : value.per_input) {
    EXPECT_NEAR(p, 1.0, 1e-12);
  }
  EXPECT_NEAR(value.overall, 1.0, 1e-12);
}

TEST(QuantumStrategyTest, Table1OIsPerfectOnGhzO) {
  const auto value = play_quantum(GameId::GhzO, builtin_quantum_strategy(BuiltinStrategy::Table1O));
  ASSERT_EQ(value.per_input.size(), 4u);
  for (double p : value.per_input) {
    EXPECT_NEAR(p, 1.0, 1e-12);
  }
  EXPECT_NEAR(value.overall, 1.0, 1e-12);
}

TEST(QuantumStrategyTest, Lemma1IsPerfectOnR2ghz) {
  const auto value = play_quantum(GameId::R2ghz, builtin_quantum_strategy(BuiltinStrategy::Lemma1));
  ASSERT_EQ(value.per_input.size(), 16u);
  for (double p : value.per_input) {
    EXPECT_NEAR(p, 1.0, 1e-12);
  }
  EXPECT_NEAR(value.overall, 1.0, 1e-12);
}

TEST(QuantumStrategyTest, ChshCalibrationHitsTheKnownValueOnEveryInput) {
  const auto value =
      play_quantum(GameId::Chsh, builtin_quantum_strategy(BuiltinStrategy::ChshCalibration));
  const double expected = 0.5 * (1.0 + 1.0 / std::numbers::sqrt2);
  ASSERT_EQ(value.per_input.size(), 4u);
  for (double p : value.per_input) {
    EXPECT_NEAR(p, expected, 1e-9);
  }
  EXPECT_NEAR(value.overall, expected, 1e-9);
}

TEST(QuantumStrategyTest, MismatchedPairingThrows) {
  EXPECT_THROW(play_quantum(GameId::GhzE, builtin_quantum_strategy(BuiltinStrategy::Lemma1)),
               std::invalid_argument);
  EXPECT_THROW(play_quantum(GameId::Chsh, builtin_quantum_strategy(BuiltinStrategy::Table1E)),
               std::invalid_argument);
  EXPECT_THROW(
      play_quantum(GameId::R2ghz, builtin_quantum_strategy(BuiltinStrategy::ChshCalibration)),
      std::invalid_argument);
}

// The frozen reference table: a = !x, b = y, c = z on all eight Rghz
// inputs. Exactly the all-zero and all-one input rows lose.
TEST(ReferenceStrategyTest, RowsMatchTheFrozenTable) {
  struct Expected {
    int r1, x, y, z, omega, a, b, c;
    bool win;
  };
  const Expected expected[] = {
      {0, 0, 0, 0, 0, 1, 0, 0, false}, {0, 0, 1, 1, 1, 1, 1, 1, true},
      {0, 1, 0, 1, 1, 0, 0, 1, true},  {0, 1, 1, 0, 1, 0, 1, 0, true},
      {1, 0, 0, 1, 0, 1, 0, 1, true},  {1, 0, 1, 0, 0, 1, 1, 0, true},
      {1, 1, 0, 0, 0, 0, 0, 0, true},  {1, 1, 1, 1, 1, 0, 1, 1, false},
  };
  const auto rows = rghz_reference_rows();
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SCOPED_TRACE(i);
    EXPECT_EQ(*rows[i].input.r1, expected[i].r1);
    EXPECT_EQ(rows[i].input.x, expected[i].x);
    EXPECT_EQ(rows[i].input.y, expected[i].y);
    EXPECT_EQ(*rows[i].input.z, expected[i].z);
    EXPECT_EQ(rows[i].omega, expected[i].omega);
    EXPECT_EQ(rows[i].outputs[0], expected[i].a);
    EXPECT_EQ(rows[i].outputs[1], expected[i].b);
    EXPECT_EQ(rows[i].outputs[2], expected[i].c);
    EXPECT_EQ(rows[i].parity, expected[i].a ^ expected[i].b ^ expected[i].c);
    EXPECT_EQ(rows[i].win, expected[i].win);
  }
}

TEST(ReferenceStrategyTest, ValuesAreThreeQuarters) {
  EXPECT_EQ(play_classical(GameId::Rghz, rghz_reference_strategy()), Rational(6, 8));
  EXPECT_EQ(play_classical(GameId::Rghz, rghz_reference_strategy()), Rational(3, 4));
  EXPECT_EQ(play_classical(GameId::R2ghz, r2ghz_reference_strategy()), Rational(3, 4));
}

TEST(NamesTest, RoundTripAndRejectUnknown) {
  for (GameId game :
       {GameId::GhzE, GameId::GhzO, GameId::Rghz, GameId::R2ghz, GameId::Chsh}) {
    EXPECT_EQ(game_from_string(to_string(game)), game);
  }
  EXPECT_EQ(to_string(GameId::GhzE), "ghz-e");
  EXPECT_EQ(to_string(GameId::R2ghz), "r2ghz");
  EXPECT_THROW(game_from_string("ghz"), std::invalid_argument);
  EXPECT_THROW(builtin_strategy_from_string("table1"), std::invalid_argument);
  EXPECT_EQ(to_string(Party::Charlie), "charlie");
}

TEST(ClassicalStrategyTest, WrongShapeIsRejected) {
  ClassicalStrategy two_tables{{TruthTable(1, 0b01), TruthTable(1, 0b01)}};
  EXPECT_THROW(play_classical(GameId::GhzE, two_tables), std::invalid_argument);
  ClassicalStrategy wrong_arity{{TruthTable(2, 0), TruthTable(1, 0), TruthTable(1, 0)}};
  EXPECT_THROW(play_classical(GameId::GhzE, wrong_arity), std::invalid_argument);
}

}  // namespace
}  // namespace ghzlab
