#pragma once

#include <cstdint>
#include <vector>

#include "ghzlab/games.hpp"
#include "ghzlab/rational.hpp"
#include "ghzlab/report.hpp"

namespace ghzlab {

// Result of exhausting the deterministic strategies of one game. Only views
// that can actually occur under the promise are enumerated; a strategy's
// behavior elsewhere cannot affect its success, so unreachable table bits are
// pinned to 0 and each function on reachable views appears exactly once.
struct BoundCertificate {
  GameId game;
  Rational optimum;
  std::uint64_t strategies_examined = 0;
  // Total number of strategies attaining the optimum; `witnesses` holds the
  // first kReportItemCap of them in enumeration order.
  std::uint64_t optimal_total = 0;
  std::vector<ClassicalStrategy> witnesses;
};

// Exhaustive maximum of play_classical over deterministic strategies.
// Strategies are scanned in ascending (alice, bob, charlie) mask order; the
// scan is partitioned over Alice's masks across `workers` threads and merged
// deterministically, so the certificate does not depend on the worker count.
BoundCertificate optimal_classical(GameId game, int workers = 1);

// Renders a strategy the way certificates and reports do, e.g.
// "alice=0x3 bob=0x2 charlie=0x2".
std::string strategy_to_string(const ClassicalStrategy& strategy);

// Checks that RGHZ and R2GHZ have classical optimum exactly 3/4 and that the
// two reference strategies attain it.
VerificationReport verify_proposition2(int workers = 1);

// Calibrates the stack against the XOR game: classical optimum 3/4 by
// enumeration, quantum value (1 + 1/sqrt(2))/2 from the calibration strategy,
// and a 360-point grid scan over Bob's angles that must not beat it.
VerificationReport chsh_calibration(int workers = 1);

}  // namespace ghzlab
