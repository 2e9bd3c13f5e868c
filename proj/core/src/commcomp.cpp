#include "ghzlab/commcomp.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "ghzlab/games.hpp"
#include "ghzlab/qsim.hpp"
#include "parallel.hpp"

namespace ghzlab {

namespace {

int require_bit(std::optional<int> value, const char* what) {
  if (!value.has_value()) {
    throw std::invalid_argument(std::string("TaskInput: missing ") + what);
  }
  if (*value != 0 && *value != 1) {
    throw std::invalid_argument(std::string("TaskInput: ") + what + " must be 0 or 1");
  }
  return *value;
}

void check_promise(TaskId task, const TaskInput& in) {
  for (int bit : {in.x0, in.x1, in.y0, in.y1, in.z0, in.z1}) {
    if (bit != 0 && bit != 1) {
      throw std::invalid_argument("TaskInput: party bits must be 0 or 1");
    }
  }
  const int low_parity = in.x0 ^ in.y0 ^ in.z0;
  switch (task) {
    case TaskId::Cc2E:
      if (low_parity != 0) {
        throw std::invalid_argument("TaskInput: promise x0^y0^z0 = 0 violated");
      }
      break;
    case TaskId::Cc2O:
      if (low_parity != 1) {
        throw std::invalid_argument("TaskInput: promise x0^y0^z0 = 1 violated");
      }
      break;
    case TaskId::R2cc2: {
      const int r1 = require_bit(in.r1, "r1");
      require_bit(in.r2, "r2");
      if (low_parity != r1) {
        throw std::invalid_argument("TaskInput: promise x0^y0^z0 = r1 violated");
      }
      break;
    }
  }
}

std::string input_to_string(const TaskInput& in) {
  std::string s = "x=" + std::to_string(in.x0) + std::to_string(in.x1) + " y=" +
                  std::to_string(in.y0) + std::to_string(in.y1) + " z=" + std::to_string(in.z0) +
                  std::to_string(in.z1);
  if (in.r1.has_value()) {
    s += " r1=" + std::to_string(*in.r1);
  }
  if (in.r2.has_value()) {
    s += " r2=" + std::to_string(*in.r2);
  }
  return s;
}

std::string hex_mask(std::uint64_t mask) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(mask));
  return buf;
}

std::string transcript_to_string(const Transcript& t) {
  return input_to_string(t.input) + " from_alice=" + t.from_alice.str() +
         " from_bob=" + t.from_bob.str() + " output=" + std::to_string(t.output) +
         " target=" + std::to_string(t.target);
}

// Runs `body` on every promise input of `task` with a per-input seed and
// records exactness and message widths in the report.
template <typename Body>
Rational check_exact_protocol(VerificationReport& report, TaskId task, int alice_bits,
                              int bob_bits, Body&& body) {
  const auto inputs = promise_inputs(task);
  bool all_correct = true;
  bool widths_ok = true;
  std::int64_t correct = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Transcript t = body(inputs[i], static_cast<std::uint64_t>(i));
    widths_ok = widths_ok && t.from_alice.size() == alice_bits && t.from_bob.size() == bob_bits;
    if (t.correct()) {
      ++correct;
    } else {
      all_correct = false;
      report.add_counterexample(report.counterexamples.size(),
                                to_string(task) + " " + transcript_to_string(t));
    }
  }
  report.add_check(to_string(task) + " protocol exact on all " + std::to_string(inputs.size()) +
                       " promise inputs",
                   all_correct);
  report.add_check(to_string(task) + " messages are " + std::to_string(alice_bits) + "+" +
                       std::to_string(bob_bits) + " bits",
                   widths_ok);
  return Rational(correct, static_cast<std::int64_t>(inputs.size()));
}

struct EncoderScan {
  std::uint64_t decodable = 0;
  std::uint64_t examined = 0;
  std::vector<std::string> examples;
};

// Scans encoder masks [begin, end), testing each candidate built by `make`
// against `rows`/`visible`; collects decodable cases as counterexamples.
template <typename Make>
EncoderScan scan_encoders(const std::vector<RestrictionRow>& rows, const ViewExtractor& visible,
                          std::uint64_t begin, std::uint64_t end, const Make& make) {
  EncoderScan scan;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    ++scan.examined;
    auto [message_bits, rendering] = make(mask);
    if (const auto decoder = find_decoder(rows, message_bits, visible)) {
      if (scan.examples.size() < static_cast<std::size_t>(kReportItemCap)) {
        scan.examples.push_back(rendering + " decoder=" + hex_mask(decoder->mask()));
      }
      ++scan.decodable;
    }
  }
  return scan;
}

// Merged parallel scan over `total` encoder masks, deterministic in the
// worker count.
template <typename Make>
EncoderScan scan_encoders_parallel(const std::vector<RestrictionRow>& rows,
                                   const ViewExtractor& visible, std::uint64_t total, int workers,
                                   const Make& make) {
  std::vector<EncoderScan> chunks(static_cast<std::size_t>(std::max(workers, 1)));
  const int used =
      detail::run_partitioned(total, workers, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
        chunks[static_cast<std::size_t>(chunk)] = scan_encoders(rows, visible, begin, end, make);
      });
  EncoderScan merged;
  for (int c = 0; c < used; ++c) {
    auto& local = chunks[static_cast<std::size_t>(c)];
    merged.decodable += local.decodable;
    merged.examined += local.examined;
    for (auto& example : local.examples) {
      if (merged.examples.size() >= static_cast<std::size_t>(kReportItemCap)) {
        break;
      }
      merged.examples.push_back(std::move(example));
    }
  }
  return merged;
}

const ViewExtractor kAliceLowHigh = [](const TaskInput& in) {
  return BitString{in.x0, in.x1};
};
const ViewExtractor kBobLowHigh = [](const TaskInput& in) { return BitString{in.y0, in.y1}; };
const ViewExtractor kCharlieLowHigh = [](const TaskInput& in) {
  return BitString{in.z0, in.z1};
};

}  // namespace

std::string to_string(TaskId task) {
  switch (task) {
    case TaskId::Cc2E:
      return "cc2e";
    case TaskId::Cc2O:
      return "cc2o";
    case TaskId::R2cc2:
      return "r2cc2";
  }
  throw std::logic_error("unreachable");
}

int eval_task_function(TaskId task, const TaskInput& input) {
  check_promise(task, input);
  const int high = input.x1 ^ input.y1 ^ input.z1;
  switch (task) {
    case TaskId::Cc2E:
      return high ^ (input.x0 | input.y0 | input.z0);
    case TaskId::Cc2O:
      return high ^ (input.x0 & input.y0 & input.z0);
    case TaskId::R2cc2:
      return high ^ winning_bit(input.x0, input.y0, input.z0, *input.r1);
  }
  throw std::logic_error("unreachable");
}

int ftilde(int x0, int z0, int y0, int y1, int r1) {
  for (int bit : {x0, z0, y0, y1, r1}) {
    if (bit != 0 && bit != 1) {
      throw std::invalid_argument("ftilde: arguments must be 0 or 1");
    }
  }
  const int not_r1 = r1 ^ 1;
  if (x0 == 0 && z0 == 0) {
    return y1 ^ (y0 & not_r1);
  }
  if (x0 == 1 && z0 == 1) {
    return y1 ^ not_r1 ^ (y0 & r1);
  }
  return y1 ^ not_r1;
}

std::vector<TaskInput> promise_inputs(TaskId task) {
  std::vector<TaskInput> inputs;
  if (task == TaskId::R2cc2) {
    inputs.reserve(128);
    for (int r2 = 0; r2 < 2; ++r2) {
      for (unsigned v = 0; v < 64; ++v) {
        TaskInput in;
        in.x0 = (v >> 5) & 1;
        in.x1 = (v >> 4) & 1;
        in.y0 = (v >> 3) & 1;
        in.y1 = (v >> 2) & 1;
        in.z0 = (v >> 1) & 1;
        in.z1 = v & 1;
        in.r1 = in.x0 ^ in.y0 ^ in.z0;
        in.r2 = r2;
        inputs.push_back(in);
      }
    }
    return inputs;
  }
  const int parity = task == TaskId::Cc2O ? 1 : 0;
  inputs.reserve(32);
  for (unsigned v = 0; v < 64; ++v) {
    TaskInput in;
    in.x0 = (v >> 5) & 1;
    in.x1 = (v >> 4) & 1;
    in.y0 = (v >> 3) & 1;
    in.y1 = (v >> 2) & 1;
    in.z0 = (v >> 1) & 1;
    in.z1 = v & 1;
    if ((in.x0 ^ in.y0 ^ in.z0) == parity) {
      inputs.push_back(in);
    }
  }
  return inputs;
}

Transcript run_quantum_protocol(TaskId task, const TaskInput& input, std::uint64_t seed) {
  check_promise(task, input);
  GameId game = GameId::GhzE;
  BuiltinStrategy which = BuiltinStrategy::Table1E;
  GameInput g;
  g.x = input.x0;
  g.y = input.y0;
  g.z = input.z0;
  switch (task) {
    case TaskId::Cc2E:
      break;
    case TaskId::Cc2O:
      game = GameId::GhzO;
      which = BuiltinStrategy::Table1O;
      break;
    case TaskId::R2cc2:
      game = GameId::R2ghz;
      which = BuiltinStrategy::Lemma1;
      g.r1 = input.r1;
      g.r2 = input.r2;
      break;
  }

  const QuantumStrategy strategy = builtin_quantum_strategy(which);
  const auto views = party_views(game, g);
  std::vector<EquatorialObservable> observables;
  observables.reserve(views.size());
  for (std::size_t p = 0; p < views.size(); ++p) {
    observables.push_back(strategy.assignment[p].at(views[p].bits));
  }

  BitString outcome = BitString::from_index(0, 3);
  for (const auto& [bits, count] : sample_outcomes(strategy.shared, observables, 1, seed)) {
    if (count == 1) {
      outcome = bits;
      break;
    }
  }

  Transcript t;
  t.input = input;
  t.from_alice = BitString{outcome.bit(0) ^ input.x1};
  t.from_bob = BitString{outcome.bit(1) ^ input.y1};
  t.output = t.from_alice.bit(0) ^ t.from_bob.bit(0) ^ outcome.bit(2) ^ input.z1;
  t.target = eval_task_function(task, input);
  return t;
}

Transcript run_classical_protocol(TaskId task, const TaskInput& input, ChannelConfig config) {
  check_promise(task, input);
  const int want_bob = task == TaskId::R2cc2 ? 2 : 1;
  if (config.alice_bits != 2 || config.bob_bits != want_bob) {
    throw std::invalid_argument("run_classical_protocol: unsupported channel for " +
                                to_string(task) + ", needs (2," + std::to_string(want_bob) + ")");
  }
  Transcript t;
  t.input = input;
  t.target = eval_task_function(task, input);
  t.from_alice = BitString{input.x0, input.x1};
  if (task == TaskId::R2cc2) {
    t.from_bob = BitString{input.y0, input.y1};
  } else {
    t.from_bob = BitString{input.y1};
  }

  // Charlie reads only the messages and his own bits.
  const int x0 = t.from_alice.bit(0);
  const int x1 = t.from_alice.bit(1);
  if (task == TaskId::R2cc2) {
    const int y0 = t.from_bob.bit(0);
    const int y1 = t.from_bob.bit(1);
    const int r1 = x0 ^ y0 ^ input.z0;
    t.output = x1 ^ y1 ^ input.z1 ^ winning_bit(x0, y0, input.z0, r1);
  } else {
    const int y1 = t.from_bob.bit(0);
    const int promised_parity = task == TaskId::Cc2O ? 1 : 0;
    const int y0 = x0 ^ input.z0 ^ promised_parity;
    const int low = task == TaskId::Cc2O ? (x0 & y0 & input.z0) : (x0 | y0 | input.z0);
    t.output = x1 ^ y1 ^ input.z1 ^ low;
  }
  return t;
}

std::optional<TruthTable> find_decoder(const std::vector<RestrictionRow>& rows,
                                       const std::vector<MessageBit>& message_bits,
                                       const ViewExtractor& visible) {
  const TaskInput probe = rows.empty() ? TaskInput{} : rows.front().input;
  const int arity = static_cast<int>(message_bits.size()) + visible(probe).size();
  if (arity > TruthTable::kMaxArity) {
    throw std::invalid_argument("find_decoder: decoder arity out of range");
  }

  std::array<int, 64> fiber = {};
  fiber.fill(-1);
  for (const auto& row : rows) {
    BitString key;
    for (const auto& mb : message_bits) {
      key.push_back(mb.encoder.evaluate(mb.view(row.input)));
    }
    key = key.concat(visible(row.input));
    if (key.size() != arity) {
      throw std::invalid_argument("find_decoder: inconsistent view widths");
    }
    int& slot = fiber[key.index()];
    if (slot == -1) {
      slot = row.target;
    } else if (slot != row.target) {
      return std::nullopt;
    }
  }

  std::uint64_t mask = 0;
  for (unsigned k = 0; k < (1u << arity); ++k) {
    if (fiber[k] == 1) {
      mask |= std::uint64_t{1} << k;
    }
  }
  return TruthTable(arity, mask);
}

VerificationReport verify_theorem1(std::uint64_t seed) {
  VerificationReport report;
  report.command = "theorem1";
  report.seed = seed;
  Rational total(0, 1);
  for (TaskId task : {TaskId::Cc2E, TaskId::Cc2O}) {
    const Rational fraction =
        check_exact_protocol(report, task, 1, 1, [&](const TaskInput& input, std::uint64_t i) {
          return run_quantum_protocol(task, input, seed + i);
        });
    total = total + fraction / Rational(2, 1);
  }
  report.value = total;
  report.examined = 64;
  return report;
}

VerificationReport verify_theorem2(TaskId task, int workers) {
  if (task != TaskId::Cc2E && task != TaskId::Cc2O) {
    throw std::invalid_argument("verify_theorem2: task must be cc2e or cc2o");
  }
  VerificationReport report;
  report.command = std::string("theorem2-") + (task == TaskId::Cc2E ? "e" : "o");

  std::vector<RestrictionRow> rows;
  for (const auto& input : promise_inputs(task)) {
    rows.push_back({input, eval_task_function(task, input)});
  }

  const auto make_encoders = [](std::uint64_t mask) {
    const std::uint64_t alice = mask >> 4;
    const std::uint64_t bob = mask & 0xF;
    std::vector<MessageBit> bits;
    bits.push_back({kAliceLowHigh, TruthTable(2, alice)});
    bits.push_back({kBobLowHigh, TruthTable(2, bob)});
    return std::pair(std::move(bits), "alice=" + hex_mask(alice) + " bob=" + hex_mask(bob));
  };
  const EncoderScan scan =
      scan_encoders_parallel(rows, kCharlieLowHigh, 256, workers, make_encoders);
  report.examined = scan.examined;
  report.add_check("all 256 one-bit encoder pairs leave the value undecodable",
                   scan.decodable == 0);
  report.counterexamples = scan.examples;

  // Machinery sanity: with the low-bit part of the task stripped away, the
  // high-bit parity is decodable from the same channel.
  std::vector<RestrictionRow> parity_rows = rows;
  for (auto& row : parity_rows) {
    row.target = row.input.x1 ^ row.input.y1 ^ row.input.z1;
  }
  std::vector<MessageBit> forward_high;
  forward_high.push_back({kAliceLowHigh, TruthTable(2, 0b1010)});
  forward_high.push_back({kBobLowHigh, TruthTable(2, 0b1010)});
  report.add_check("high-bit parity alone is decodable over the same channel",
                   find_decoder(parity_rows, forward_high, kCharlieLowHigh).has_value());

  report.notes.push_back(
      "shared randomness is a convex mixture of the enumerated deterministic protocols, so it "
      "cannot lift an exact-computation bound");
  return report;
}

VerificationReport verify_theorem3(std::uint64_t seed) {
  VerificationReport report;
  report.command = "theorem3";
  report.seed = seed;
  report.value =
      check_exact_protocol(report, TaskId::R2cc2, 1, 1, [&](const TaskInput& input, std::uint64_t i) {
        return run_quantum_protocol(TaskId::R2cc2, input, seed + i);
      });
  report.examined = 128;
  return report;
}

namespace {

// Shared body of the two channel-asymmetry searches. The wide sender's bits
// enter the decoder view directly; the narrow sender's view is compressed by
// each of the 256 candidate single-bit encoders, which must let the decoder
// evaluate every restricted function ftilde(low-bit pair, -) on its whole
// (low bit, high bit, r1) domain.
VerificationReport verify_theorem4(bool bob_is_narrow, int workers) {
  VerificationReport report;
  report.command = bob_is_narrow ? "theorem4-c1" : "theorem4-c2";

  // For C1 the narrow sender is Bob with view (y0, y1, r1) and the decoder
  // sees (x0, z0); for C2 the roles of x and y swap. ftilde covers both: its
  // first two arguments are the decoder-side low bits, its remaining three
  // the narrow sender's view, and the underlying mix of OR and AND is
  // symmetric under that swap.
  std::vector<RestrictionRow> rows;
  for (unsigned v = 0; v < 32; ++v) {
    const int visible_low = (v >> 4) & 1;  // x0 for C1, y0 for C2
    const int z0 = (v >> 3) & 1;
    const int narrow_low = (v >> 2) & 1;
    const int narrow_high = (v >> 1) & 1;
    const int r1 = v & 1;
    TaskInput in;
    in.z0 = z0;
    in.r1 = r1;
    if (bob_is_narrow) {
      in.x0 = visible_low;
      in.y0 = narrow_low;
      in.y1 = narrow_high;
      in.r2 = 1;
    } else {
      in.y0 = visible_low;
      in.x0 = narrow_low;
      in.x1 = narrow_high;
      in.r2 = 0;
    }
    rows.push_back({in, ftilde(visible_low, z0, narrow_low, narrow_high, r1)});
  }

  ViewExtractor narrow_view;
  ViewExtractor visible;
  if (bob_is_narrow) {
    narrow_view = [](const TaskInput& in) { return BitString{in.y0, in.y1, *in.r1}; };
    visible = [](const TaskInput& in) { return BitString{in.x0, in.z0}; };
  } else {
    narrow_view = [](const TaskInput& in) { return BitString{in.x0, in.x1, *in.r1}; };
    visible = [](const TaskInput& in) { return BitString{in.y0, in.z0}; };
  }

  const char* narrow = bob_is_narrow ? "bob" : "alice";
  const auto make_single = [&](std::uint64_t mask) {
    std::vector<MessageBit> bits;
    bits.push_back({narrow_view, TruthTable(3, mask)});
    return std::pair(std::move(bits), std::string(narrow) + "=" + hex_mask(mask));
  };
  const EncoderScan scan = scan_encoders_parallel(rows, visible, 256, workers, make_single);
  report.examined = scan.examined;
  report.add_check(std::string("all 256 one-bit encoders for ") + narrow +
                       " leave some restricted function undecodable",
                   scan.decodable == 0);
  report.counterexamples = scan.examples;

  // Machinery sanity on the promise-consistent sub-family: two bits (the
  // high bit and r1) are decodable, the decoder recovering the narrow
  // sender's low bit from the promise.
  std::vector<RestrictionRow> promise_rows;
  for (const auto& row : rows) {
    if ((row.input.x0 ^ row.input.y0 ^ row.input.z0) == *row.input.r1) {
      promise_rows.push_back(row);
    }
  }
  std::vector<MessageBit> two_bits;
  two_bits.push_back({narrow_view, TruthTable(3, 0xCC)});
  two_bits.push_back({narrow_view, TruthTable(3, 0xAA)});
  report.add_check(std::string("a two-bit message (high bit, r1) from ") + narrow +
                       " is decodable on the promise-consistent rows",
                   find_decoder(promise_rows, two_bits, visible).has_value());

  report.notes.push_back(std::string("restriction: r2 = ") + (bob_is_narrow ? "1" : "0") +
                         ", high bits of " + (bob_is_narrow ? "x and z" : "y and z") +
                         " fixed to 0; the wide sender forwards its whole view");
  report.notes.push_back(
      "shared randomness is a convex mixture of the enumerated deterministic protocols, so it "
      "cannot lift an exact-computation bound");
  return report;
}

}  // namespace

VerificationReport verify_theorem4_c1(int workers) { return verify_theorem4(true, workers); }

VerificationReport verify_theorem4_c2(int workers) { return verify_theorem4(false, workers); }

VerificationReport verify_proposition1(TaskId task) {
  if (task != TaskId::Cc2E && task != TaskId::Cc2O) {
    throw std::invalid_argument("verify_proposition1: task must be cc2e or cc2o");
  }
  VerificationReport report;
  report.command = std::string("prop1-") + (task == TaskId::Cc2E ? "e" : "o");
  report.value = check_exact_protocol(report, task, 2, 1, [&](const TaskInput& input, std::uint64_t) {
    return run_classical_protocol(task, input, {2, 1});
  });
  report.examined = 32;
  return report;
}

VerificationReport verify_proposition3() {
  VerificationReport report;
  report.command = "prop3";
  report.value =
      check_exact_protocol(report, TaskId::R2cc2, 2, 2, [&](const TaskInput& input, std::uint64_t) {
        return run_classical_protocol(TaskId::R2cc2, input, {2, 2});
      });
  report.examined = 128;
  return report;
}

}  // namespace ghzlab
