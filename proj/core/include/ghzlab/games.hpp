#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghzlab/bits.hpp"
#include "ghzlab/qsim.hpp"
#include "ghzlab/rational.hpp"
#include "ghzlab/truth_table.hpp"

namespace ghzlab {

// The five games. GhzE/GhzO are the even/odd-parity GHZ games; Rghz hides
// the parity bit with Alice; R2ghz additionally randomizes which of
// Alice/Bob holds it; Chsh is the two-party XOR game kept as a simulator
// calibration target.
enum class GameId { GhzE, GhzO, Rghz, R2ghz, Chsh };

enum class Party { Alice, Bob, Charlie };

// One referee input. z is absent for Chsh; r1 is present for Rghz and
// R2ghz; r2 only for R2ghz.
struct GameInput {
  int x = 0;
  int y = 0;
  std::optional<int> z;
  std::optional<int> r1;
  std::optional<int> r2;
};

struct PartyView {
  Party party;
  BitString bits;
};

// One deterministic output function per party, arity matching that party's
// view length.
struct ClassicalStrategy {
  std::vector<TruthTable> tables;
};

// Shared state plus, per party, a map from the party's view to the
// observable it measures.
struct QuantumStrategy {
  PureState shared;
  std::vector<std::map<BitString, EquatorialObservable>> assignment;
};

enum class BuiltinStrategy { Table1E, Table1O, Lemma1, ChshCalibration };

struct QuantumValue {
  double overall = 0.0;
  // Aligned with promise_inputs(game).
  std::vector<double> per_input;
};

int party_count(GameId game);

std::string to_string(GameId game);
std::string to_string(Party party);
GameId game_from_string(const std::string& name);
BuiltinStrategy builtin_strategy_from_string(const std::string& name);

// The required output parity: (x|y|z) when r1 = 0 and (x&y&z) when r1 = 1.
int winning_bit(int x, int y, int z, int r1);

// Required value of the players' output parity for `input`; x&y for Chsh.
int target_parity(GameId game, const GameInput& input);

// All inputs satisfying the game's promise, each drawn with equal weight.
// Ordering is lexicographic on (r2, r1, x, y, z).
std::vector<GameInput> promise_inputs(GameId game);

// What each party gets to see. R2ghz: Alice sees (x, r2, r1 & !r2), Bob
// (y, r2, r1 & r2), Charlie (z); Rghz: Alice (x, r1), Bob (y), Charlie (z);
// GhzE/GhzO/Chsh: each party its own input bit.
std::vector<PartyView> party_views(GameId game, const GameInput& input);

// Outputs of a classical strategy on one input, in party order.
std::vector<int> classical_outputs(GameId game, const ClassicalStrategy& strategy,
                                   const GameInput& input);

// Fraction of promise inputs won, as an exact rational with denominator
// |promise_inputs(game)| before reduction.
Rational play_classical(GameId game, const ClassicalStrategy& strategy);

// Exact Born-rule win probability per promise input and their average.
QuantumValue play_quantum(GameId game, const QuantumStrategy& strategy);

QuantumStrategy builtin_quantum_strategy(BuiltinStrategy which);

// a = !x, b = y, c = z over the Rghz views; wins 6 of the 8 promise inputs.
ClassicalStrategy rghz_reference_strategy();

// The r2-switched variant for R2ghz: a = !x, b = y when r2 = 0 and a = x,
// b = !y when r2 = 1, c = z; attains the classical optimum 3/4.
ClassicalStrategy r2ghz_reference_strategy();

// One Rghz promise input played by the reference strategy, spelled out.
struct StrategyTableRow {
  GameInput input;
  int omega = 0;  // required output parity
  std::array<int, 3> outputs = {0, 0, 0};
  int parity = 0;
  bool win = false;
};

// The reference strategy on all eight Rghz promise inputs, in
// promise_inputs order; exactly the two all-equal-inputs rows lose.
std::vector<StrategyTableRow> rghz_reference_rows();

}  // namespace ghzlab
