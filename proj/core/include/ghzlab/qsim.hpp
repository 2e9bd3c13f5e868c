#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ghzlab/bits.hpp"

namespace ghzlab {

// Tolerance for every exactness assertion on doubles; rounding on dim-8
// products stays far below this.
inline constexpr double kNormTolerance = 1e-12;

// Probabilities this close to zero from below are rounding noise and get
// clamped to exactly 0.
inline constexpr double kProbClampFloor = -1e-15;

// Normalized pure state on 1..3 qubits, stored dense. Qubit 0 occupies the
// most significant bit of the amplitude index.
class PureState {
 public:
  explicit PureState(std::vector<std::complex<double>> amplitudes);

  int qubit_count() const { return qubit_count_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(unsigned basis_index) const;

 private:
  int qubit_count_;
  std::vector<std::complex<double>> amplitudes_;
};

// (|000> + |111>)/sqrt(2)
PureState ghz_state();

// (|00> + |11>)/sqrt(2)
PureState bell_state();

// The +/-1-valued observable cos(theta) X + sin(theta) Y on the Bloch
// equator. Its +1 eigenvector is (|0> + e^{i theta}|1>)/sqrt(2); outcome +1
// is declared as bit 0 and outcome -1 as bit 1.
class EquatorialObservable {
 public:
  explicit EquatorialObservable(double theta);

  double theta() const { return theta_; }

  // Measurement along the opposite Bloch direction: theta + pi.
  EquatorialObservable reversed() const;

 private:
  double theta_;  // normalized into [0, 2*pi)
};

EquatorialObservable pauli_x();      // theta = 0
EquatorialObservable pauli_y();      // theta = pi/2
EquatorialObservable pauli_neg_y();  // theta = 3*pi/2, i.e. reversed pauli_y

// Exact joint distribution of declared bits, indexed by the outcome tuple's
// integer encoding (first party's bit most significant).
class OutcomeDistribution {
 public:
  OutcomeDistribution(int qubit_count, std::vector<double> probabilities);

  int qubit_count() const { return qubit_count_; }
  std::size_t size() const { return probabilities_.size(); }
  double probability(unsigned outcome_index) const;
  double probability(const BitString& outcome) const;
  const std::vector<double>& probabilities() const { return probabilities_; }

 private:
  int qubit_count_;
  std::vector<double> probabilities_;
};

// Born-rule joint distribution of one product measurement, one observable per
// qubit.
OutcomeDistribution outcome_distribution(const PureState& state,
                                         std::span<const EquatorialObservable> observables);

// P(parity of outcome bits = 0) - P(parity = 1); equals the expectation of
// the tensor product of the observables.
double parity_bias(const PureState& state, std::span<const EquatorialObservable> observables);

// Inverse-CDF draw at u in [0, 1): the first outcome whose cumulative
// probability exceeds u. Zero-probability outcomes are never returned.
unsigned draw_outcome(const OutcomeDistribution& dist, double u);

// Outcome counts over `shots` i.i.d. draws from outcome_distribution.
// Deterministic for a given seed; every outcome tuple appears as a key, with
// count 0 where never drawn.
std::map<BitString, std::uint64_t> sample_outcomes(const PureState& state,
                                                   std::span<const EquatorialObservable> observables,
                                                   std::uint64_t shots, std::uint64_t seed);

}  // namespace ghzlab
