#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ghzlab/bits.hpp"
#include "ghzlab/report.hpp"
#include "ghzlab/truth_table.hpp"

namespace ghzlab {

// Three-party number-in-hand tasks: each party holds two bits, Alice and Bob
// each send Charlie one message over a one-way channel, and Charlie must
// announce the task value. Cc2E/Cc2O fix the low-bit parity; R2cc2 replaces
// it by a random target r1 that is handed to Alice (r2 = 0) or Bob (r2 = 1).
enum class TaskId { Cc2E, Cc2O, R2cc2 };

std::string to_string(TaskId task);

// One task instance. r1/r2 are only present for R2cc2.
struct TaskInput {
  int x0 = 0, x1 = 0;
  int y0 = 0, y1 = 0;
  int z0 = 0, z1 = 0;
  std::optional<int> r1;
  std::optional<int> r2;
};

// Task value on a promise-satisfying input: the XOR of the high bits folded
// with OR (Cc2E), AND (Cc2O), or the r1-selected mix of the two (R2cc2) of
// the low bits.
int eval_task_function(TaskId task, const TaskInput& input);

// Restriction of the randomized task to r2 = 1, x1 = z1 = 0, grouped by
// (x0, z0): the task value becomes a function of Bob's bits and r1 alone,
// namely y1 ^ (y0 & !r1) at (0,0), y1 ^ !r1 at (0,1) and (1,0), and
// y1 ^ !r1 ^ (y0 & r1) at (1,1). Defined for every (y0, y1, r1), not just
// the promise-consistent ones.
int ftilde(int x0, int z0, int y0, int y1, int r1);

// All inputs satisfying the task's promise: ascending (x0, x1, y0, y1, z0,
// z1) for Cc2E/Cc2O (32 each), ascending (r2, x0, x1, y0, y1, z0, z1) with
// r1 set to the low-bit parity for R2cc2 (128).
std::vector<TaskInput> promise_inputs(TaskId task);

// Message widths granted to the two senders.
struct ChannelConfig {
  int alice_bits = 1;
  int bob_bits = 1;
};

// One protocol run on one input.
struct Transcript {
  TaskInput input;
  BitString from_alice;
  BitString from_bob;
  int output = 0;
  int target = 0;

  bool correct() const { return output == target; }
};

// Entangled protocol with a single message bit per sender: the parties
// measure the shared three-qubit state according to their low bits (and
// r1/r2 where present), Alice sends a ^ x1, Bob sends b ^ y1, and Charlie
// announces their XOR folded with c ^ z1. The measurement outcome is drawn
// with the given seed; the announced value is correct for every seed.
Transcript run_quantum_protocol(TaskId task, const TaskInput& input, std::uint64_t seed);

// Unentangled protocol on the stated channel: Alice sends (x0, x1); Bob
// sends y1 for Cc2E/Cc2O under config (2,1), where Charlie recovers y0 from
// the promise, and (y0, y1) for R2cc2 under config (2,2), where Charlie
// recovers r1. Any other (task, config) pairing is rejected.
Transcript run_classical_protocol(TaskId task, const TaskInput& input, ChannelConfig config);

// Reads the bits a sender or the decoder sees directly, in a fixed order.
using ViewExtractor = std::function<BitString(const TaskInput&)>;

// One transmitted bit: the view it is computed from and the function applied
// to that view.
struct MessageBit {
  ViewExtractor view;
  TruthTable encoder;
};

// A family of inputs a candidate protocol must be exact on.
struct RestrictionRow {
  TaskInput input;
  int target = 0;
};

// Decides whether any decoder recovers the target from the message bits plus
// the directly visible bits: one exists iff the target is constant on every
// fiber of (messages, visible bits). Returns the decoder as a table over the
// message bits followed by the visible bits, with inputs no row reaches
// mapped to 0; an empty row family yields the constant-0 decoder.
std::optional<TruthTable> find_decoder(const std::vector<RestrictionRow>& rows,
                                       const std::vector<MessageBit>& message_bits,
                                       const ViewExtractor& visible);

// Entangled one-bit-per-sender protocols are exact: every Cc2E and Cc2O
// promise input (64 transcripts).
VerificationReport verify_theorem1(std::uint64_t seed);

// No classical one-bit-per-sender protocol computes Cc2E or Cc2O: all 256
// encoder pairs leave Charlie with colliding inputs. Shared randomness
// cannot help, being a mixture of the enumerated deterministic protocols.
VerificationReport verify_theorem2(TaskId task, int workers = 1);

// The entangled protocol stays exact on the randomized task (128
// transcripts).
VerificationReport verify_theorem3(std::uint64_t seed);

// Classically the randomized task needs two bits from each sender. With Bob
// capped at one bit and Alice's whole view handed to Charlie, restrict to
// r2 = 1, x1 = z1 = 0: Charlie must then evaluate each ftilde(x0, z0, -) as
// a total function of (y0, y1, r1), and all 256 one-bit encoders of that
// view fail, the family having six distinct joint value patterns.
VerificationReport verify_theorem4_c1(int workers = 1);

// Mirror image: Alice capped at one bit over (x0, x1, r1), r2 = 0,
// y1 = z1 = 0, Bob's view handed to Charlie.
VerificationReport verify_theorem4_c2(int workers = 1);

// The classical (2,1)-bit protocol is exact on Cc2E/Cc2O.
VerificationReport verify_proposition1(TaskId task);

// The classical (2,2)-bit protocol is exact on the randomized task.
VerificationReport verify_proposition3();

}  // namespace ghzlab
