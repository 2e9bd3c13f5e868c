#include "ghzlab/games.hpp"

#include <numbers>
#include <stdexcept>

namespace ghzlab {

namespace {

int require_bit(std::optional<int> value, const char* what) {
  if (!value.has_value()) {
    throw std::invalid_argument(std::string("GameInput: missing ") + what);
  }
  if (*value != 0 && *value != 1) {
    throw std::invalid_argument(std::string("GameInput: ") + what + " must be 0 or 1");
  }
  return *value;
}

void check_promise(GameId game, const GameInput& in) {
  if (in.x != 0 && in.x != 1) {
    throw std::invalid_argument("GameInput: x must be 0 or 1");
  }
  if (in.y != 0 && in.y != 1) {
    throw std::invalid_argument("GameInput: y must be 0 or 1");
  }
  switch (game) {
    case GameId::GhzE: {
      const int z = require_bit(in.z, "z");
      if ((in.x ^ in.y ^ z) != 0) {
        throw std::invalid_argument("GameInput: GHZ-E promise x^y^z = 0 violated");
      }
      break;
    }
    case GameId::GhzO: {
      const int z = require_bit(in.z, "z");
      if ((in.x ^ in.y ^ z) != 1) {
        throw std::invalid_argument("GameInput: GHZ-O promise x^y^z = 1 violated");
      }
      break;
    }
    case GameId::Rghz: {
      const int z = require_bit(in.z, "z");
      const int r1 = require_bit(in.r1, "r1");
      if ((in.x ^ in.y ^ z) != r1) {
        throw std::invalid_argument("GameInput: RGHZ promise x^y^z = r1 violated");
      }
      break;
    }
    case GameId::R2ghz: {
      const int z = require_bit(in.z, "z");
      const int r1 = require_bit(in.r1, "r1");
      require_bit(in.r2, "r2");
      if ((in.x ^ in.y ^ z) != r1) {
        throw std::invalid_argument("GameInput: R2GHZ promise x^y^z = r1 violated");
      }
      break;
    }
    case GameId::Chsh:
      break;
  }
}

}  // namespace

int party_count(GameId game) { return game == GameId::Chsh ? 2 : 3; }

std::string to_string(GameId game) {
  switch (game) {
    case GameId::GhzE:
      return "ghz-e";
    case GameId::GhzO:
      return "ghz-o";
    case GameId::Rghz:
      return "rghz";
    case GameId::R2ghz:
      return "r2ghz";
    case GameId::Chsh:
      return "chsh";
  }
  throw std::logic_error("unreachable");
}

std::string to_string(Party party) {
  switch (party) {
    case Party::Alice:
      return "alice";
    case Party::Bob:
      return "bob";
    case Party::Charlie:
      return "charlie";
  }
  throw std::logic_error("unreachable");
}

GameId game_from_string(const std::string& name) {
  if (name == "ghz-e") return GameId::GhzE;
  if (name == "ghz-o") return GameId::GhzO;
  if (name == "rghz") return GameId::Rghz;
  if (name == "r2ghz") return GameId::R2ghz;
  if (name == "chsh") return GameId::Chsh;
  throw std::invalid_argument("unknown game: " + name);
}

BuiltinStrategy builtin_strategy_from_string(const std::string& name) {
  if (name == "table1-e") return BuiltinStrategy::Table1E;
  if (name == "table1-o") return BuiltinStrategy::Table1O;
  if (name == "lemma1") return BuiltinStrategy::Lemma1;
  if (name == "chsh-calibration") return BuiltinStrategy::ChshCalibration;
  throw std::invalid_argument("unknown strategy: " + name);
}

int winning_bit(int x, int y, int z, int r1) {
  const int both = x & y & z;
  const int any = x | y | z;
  return ((any & ~r1) | (both & r1)) & 1;
}

int target_parity(GameId game, const GameInput& input) {
  check_promise(game, input);
  switch (game) {
    case GameId::GhzE:
      return winning_bit(input.x, input.y, *input.z, 0);
    case GameId::GhzO:
      return winning_bit(input.x, input.y, *input.z, 1);
    case GameId::Rghz:
    case GameId::R2ghz:
      return winning_bit(input.x, input.y, *input.z, *input.r1);
    case GameId::Chsh:
      return input.x & input.y;
  }
  throw std::logic_error("unreachable");
}

std::vector<GameInput> promise_inputs(GameId game) {
  std::vector<GameInput> inputs;
  switch (game) {
    case GameId::GhzE:
    case GameId::GhzO: {
      const int parity = game == GameId::GhzE ? 0 : 1;
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          for (int z = 0; z < 2; ++z)
            if ((x ^ y ^ z) == parity) inputs.push_back({x, y, z, {}, {}});
      break;
    }
    case GameId::Rghz:
      for (int r1 = 0; r1 < 2; ++r1)
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
              if ((x ^ y ^ z) == r1) inputs.push_back({x, y, z, r1, {}});
      break;
    case GameId::R2ghz:
      for (int r2 = 0; r2 < 2; ++r2)
        for (int r1 = 0; r1 < 2; ++r1)
          for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
              for (int z = 0; z < 2; ++z)
                if ((x ^ y ^ z) == r1) inputs.push_back({x, y, z, r1, r2});
      break;
    case GameId::Chsh:
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) inputs.push_back({x, y, {}, {}, {}});
      break;
  }
  return inputs;
}

std::vector<PartyView> party_views(GameId game, const GameInput& input) {
  check_promise(game, input);
  switch (game) {
    case GameId::GhzE:
    case GameId::GhzO:
      return {{Party::Alice, {input.x}},
              {Party::Bob, {input.y}},
              {Party::Charlie, {*input.z}}};
    case GameId::Rghz:
      return {{Party::Alice, {input.x, *input.r1}},
              {Party::Bob, {input.y}},
              {Party::Charlie, {*input.z}}};
    case GameId::R2ghz: {
      const int r1 = *input.r1;
      const int r2 = *input.r2;
      return {{Party::Alice, {input.x, r2, r1 & (r2 ^ 1)}},
              {Party::Bob, {input.y, r2, r1 & r2}},
              {Party::Charlie, {*input.z}}};
    }
    case GameId::Chsh:
      return {{Party::Alice, {input.x}}, {Party::Bob, {input.y}}};
  }
  throw std::logic_error("unreachable");
}

std::vector<int> classical_outputs(GameId game, const ClassicalStrategy& strategy,
                                   const GameInput& input) {
  const auto views = party_views(game, input);
  if (strategy.tables.size() != views.size()) {
    throw std::invalid_argument("ClassicalStrategy: expected one table per party");
  }
  std::vector<int> outputs(views.size());
  for (std::size_t p = 0; p < views.size(); ++p) {
    outputs[p] = strategy.tables[p].evaluate(views[p].bits);
  }
  return outputs;
}

Rational play_classical(GameId game, const ClassicalStrategy& strategy) {
  const auto inputs = promise_inputs(game);
  std::int64_t wins = 0;
  for (const auto& input : inputs) {
    const auto outputs = classical_outputs(game, strategy, input);
    int parity = 0;
    for (int a : outputs) {
      parity ^= a;
    }
    if (parity == target_parity(game, input)) {
      ++wins;
    }
  }
  return Rational(wins, static_cast<std::int64_t>(inputs.size()));
}

QuantumValue play_quantum(GameId game, const QuantumStrategy& strategy) {
  const auto inputs = promise_inputs(game);
  const int parties = party_count(game);
  if (strategy.shared.qubit_count() != parties) {
    throw std::invalid_argument("QuantumStrategy: shared state must have one qubit per party");
  }
  if (static_cast<int>(strategy.assignment.size()) != parties) {
    throw std::invalid_argument("QuantumStrategy: expected one observable map per party");
  }

  QuantumValue result;
  result.per_input.reserve(inputs.size());
  for (const auto& input : inputs) {
    const auto views = party_views(game, input);
    std::vector<EquatorialObservable> observables;
    observables.reserve(views.size());
    for (std::size_t p = 0; p < views.size(); ++p) {
      const auto it = strategy.assignment[p].find(views[p].bits);
      if (it == strategy.assignment[p].end()) {
        throw std::invalid_argument("QuantumStrategy: no observable for " +
                                    to_string(views[p].party) + " view " + views[p].bits.str());
      }
      observables.push_back(it->second);
    }
    const auto dist = outcome_distribution(strategy.shared, observables);
    const int target = target_parity(game, input);
    double win = 0.0;
    for (unsigned outcome = 0; outcome < dist.size(); ++outcome) {
      int parity = 0;
      for (int q = 0; q < parties; ++q) {
        parity ^= (outcome >> (parties - 1 - q)) & 1;
      }
      if (parity == target) {
        win += dist.probability(outcome);
      }
    }
    result.per_input.push_back(win);
  }

  double total = 0.0;
  for (double w : result.per_input) {
    total += w;
  }
  result.overall = total / static_cast<double>(result.per_input.size());
  return result;
}

namespace {

// Measurement maps from the two columns of the perfect GHZ strategies:
// the shared E-column (also Bob/Charlie in the O game) and the O-game
// Alice column.
void assign_xy(std::map<BitString, EquatorialObservable>& m, const BitString& v0,
               const BitString& v1) {
  m.insert({v0, pauli_x()});
  m.insert({v1, pauli_y()});
}

void assign_odd_alice(std::map<BitString, EquatorialObservable>& m, const BitString& v0,
                      const BitString& v1) {
  m.insert({v0, pauli_neg_y()});
  m.insert({v1, pauli_x()});
}

}  // namespace

QuantumStrategy builtin_quantum_strategy(BuiltinStrategy which) {
  switch (which) {
    case BuiltinStrategy::Table1E: {
      QuantumStrategy s{ghz_state(), {{}, {}, {}}};
      for (auto& m : s.assignment) {
        assign_xy(m, {0}, {1});
      }
      return s;
    }
    case BuiltinStrategy::Table1O: {
      QuantumStrategy s{ghz_state(), {{}, {}, {}}};
      assign_odd_alice(s.assignment[0], {0}, {1});
      assign_xy(s.assignment[1], {0}, {1});
      assign_xy(s.assignment[2], {0}, {1});
      return s;
    }
    case BuiltinStrategy::Lemma1: {
      // Views are (input, r2, parity-bit-visible) for Alice and Bob. The
      // party that sees the parity bit plays the E or O Alice column; the
      // other plays the fixed X/Y column.
      QuantumStrategy s{ghz_state(), {{}, {}, {}}};
      // r2 = 0: Alice holds the parity bit, Bob plays the fixed column.
      assign_xy(s.assignment[0], {0, 0, 0}, {1, 0, 0});         // r1 = 0, E column
      assign_odd_alice(s.assignment[0], {0, 0, 1}, {1, 0, 1});  // r1 = 1, O column
      assign_xy(s.assignment[1], {0, 0, 0}, {1, 0, 0});
      // r2 = 1: roles swapped.
      assign_xy(s.assignment[0], {0, 1, 0}, {1, 1, 0});
      assign_xy(s.assignment[1], {0, 1, 0}, {1, 1, 0});         // r1 = 0, E column
      assign_odd_alice(s.assignment[1], {0, 1, 1}, {1, 1, 1});  // r1 = 1, O column
      assign_xy(s.assignment[2], {0}, {1});
      return s;
    }
    case BuiltinStrategy::ChshCalibration: {
      QuantumStrategy s{bell_state(), {{}, {}}};
      s.assignment[0].insert({{0}, EquatorialObservable(0.0)});
      s.assignment[0].insert({{1}, EquatorialObservable(std::numbers::pi / 2.0)});
      s.assignment[1].insert({{0}, EquatorialObservable(7.0 * std::numbers::pi / 4.0)});
      s.assignment[1].insert({{1}, EquatorialObservable(std::numbers::pi / 4.0)});
      return s;
    }
  }
  throw std::logic_error("unreachable");
}

ClassicalStrategy rghz_reference_strategy() {
  // Alice over (x, r1): !x; Bob and Charlie: identity on their bit.
  return ClassicalStrategy{{TruthTable(2, 0b0011), TruthTable(1, 0b10), TruthTable(1, 0b10)}};
}

ClassicalStrategy r2ghz_reference_strategy() {
  // Alice over (x, r2, t): !x when r2 = 0, x when r2 = 1.
  // Bob over (y, r2, t): y when r2 = 0, !y when r2 = 1. Charlie: z.
  std::uint64_t alice = 0;
  std::uint64_t bob = 0;
  for (unsigned v = 0; v < 8; ++v) {
    const int first = (v >> 2) & 1;
    const int r2 = (v >> 1) & 1;
    const int a = r2 == 0 ? (first ^ 1) : first;
    const int b = r2 == 0 ? first : (first ^ 1);
    alice |= static_cast<std::uint64_t>(a) << v;
    bob |= static_cast<std::uint64_t>(b) << v;
  }
  return ClassicalStrategy{{TruthTable(3, alice), TruthTable(3, bob), TruthTable(1, 0b10)}};
}

std::vector<StrategyTableRow> rghz_reference_rows() {
  const ClassicalStrategy strategy = rghz_reference_strategy();
  std::vector<StrategyTableRow> rows;
  for (const GameInput& input : promise_inputs(GameId::Rghz)) {
    StrategyTableRow row;
    row.input = input;
    row.omega = winning_bit(input.x, input.y, *input.z, *input.r1);
    const auto outputs = classical_outputs(GameId::Rghz, strategy, input);
    row.outputs = {outputs[0], outputs[1], outputs[2]};
    row.parity = outputs[0] ^ outputs[1] ^ outputs[2];
    row.win = row.parity == row.omega;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ghzlab
