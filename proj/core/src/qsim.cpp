#include "ghzlab/qsim.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace ghzlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

int qubit_count_for_dimension(std::size_t dim) {
  switch (dim) {
    case 2:
      return 1;
    case 4:
      return 2;
    case 8:
      return 3;
    default:
      throw std::invalid_argument("PureState: amplitude count must be 2, 4 or 8, got " +
                                  std::to_string(dim));
  }
}

}  // namespace

PureState::PureState(std::vector<std::complex<double>> amplitudes)
    : qubit_count_(qubit_count_for_dimension(amplitudes.size())),
      amplitudes_(std::move(amplitudes)) {
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) {
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("PureState: amplitudes are not normalized");
  }
}

std::complex<double> PureState::amplitude(unsigned basis_index) const {
  if (basis_index >= amplitudes_.size()) {
    throw std::out_of_range("PureState: basis index out of range");
  }
  return amplitudes_[basis_index];
}

PureState ghz_state() {
  std::vector<std::complex<double>> amps(8, 0.0);
  amps[0] = kInvSqrt2;
  amps[7] = kInvSqrt2;
  return PureState(std::move(amps));
}

PureState bell_state() {
  std::vector<std::complex<double>> amps(4, 0.0);
  amps[0] = kInvSqrt2;
  amps[3] = kInvSqrt2;
  return PureState(std::move(amps));
}

EquatorialObservable::EquatorialObservable(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("EquatorialObservable: theta must be finite");
  }
  theta_ = std::fmod(theta, kTwoPi);
  if (theta_ < 0.0) {
    theta_ += kTwoPi;
  }
}

EquatorialObservable EquatorialObservable::reversed() const {
  return EquatorialObservable(theta_ + std::numbers::pi);
}

EquatorialObservable pauli_x() { return EquatorialObservable(0.0); }
EquatorialObservable pauli_y() { return EquatorialObservable(std::numbers::pi / 2.0); }
EquatorialObservable pauli_neg_y() { return EquatorialObservable(3.0 * std::numbers::pi / 2.0); }

OutcomeDistribution::OutcomeDistribution(int qubit_count, std::vector<double> probabilities)
    : qubit_count_(qubit_count), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != (std::size_t{1} << qubit_count_)) {
    throw std::invalid_argument("OutcomeDistribution: size does not match qubit count");
  }
  double sum = 0.0;
  for (double& p : probabilities_) {
    if (p < 0.0) {
      if (p < kProbClampFloor) {
        throw std::invalid_argument("OutcomeDistribution: negative probability");
      }
      p = 0.0;
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormTolerance) {
    throw std::invalid_argument("OutcomeDistribution: probabilities do not sum to 1");
  }
}

double OutcomeDistribution::probability(unsigned outcome_index) const {
  if (outcome_index >= probabilities_.size()) {
    throw std::out_of_range("OutcomeDistribution: outcome index out of range");
  }
  return probabilities_[outcome_index];
}

double OutcomeDistribution::probability(const BitString& outcome) const {
  if (outcome.size() != qubit_count_) {
    throw std::invalid_argument("OutcomeDistribution: outcome length does not match qubit count");
  }
  return probabilities_[outcome.index()];
}

OutcomeDistribution outcome_distribution(const PureState& state,
                                         std::span<const EquatorialObservable> observables) {
  const int n = state.qubit_count();
  if (static_cast<int>(observables.size()) != n) {
    throw std::invalid_argument("outcome_distribution: need one observable per qubit");
  }
  const std::size_t dim = state.dimension();

  // Per-qubit eigenvector components: eig[q][bit][basis] with
  // eig = (|0> + (-1)^bit e^{i theta}|1>)/sqrt(2).
  std::complex<double> eig[3][2][2];
  for (int q = 0; q < n; ++q) {
    const std::complex<double> phase = std::polar(1.0, observables[q].theta());
    for (int bit = 0; bit < 2; ++bit) {
      eig[q][bit][0] = kInvSqrt2;
      eig[q][bit][1] = (bit == 0 ? phase : -phase) * kInvSqrt2;
    }
  }

  std::vector<double> probs(dim, 0.0);
  for (unsigned outcome = 0; outcome < dim; ++outcome) {
    // amp = <eig_outcome | state>, with the product eigenvector factored
    // qubit by qubit.
    std::complex<double> amp = 0.0;
    for (unsigned k = 0; k < dim; ++k) {
      std::complex<double> w = 1.0;
      for (int q = 0; q < n; ++q) {
        const int shift = n - 1 - q;
        const int obit = (outcome >> shift) & 1;
        const int kbit = (k >> shift) & 1;
        w *= std::conj(eig[q][obit][kbit]);
      }
      amp += w * state.amplitudes()[k];
    }
    probs[outcome] = std::norm(amp);
  }
  return OutcomeDistribution(n, std::move(probs));
}

double parity_bias(const PureState& state, std::span<const EquatorialObservable> observables) {
  const OutcomeDistribution dist = outcome_distribution(state, observables);
  double bias = 0.0;
  for (unsigned outcome = 0; outcome < dist.size(); ++outcome) {
    const int parity = std::popcount(outcome) & 1;
    bias += (parity == 0 ? 1.0 : -1.0) * dist.probability(outcome);
  }
  return bias;
}

unsigned draw_outcome(const OutcomeDistribution& dist, double u) {
  double acc = 0.0;
  unsigned last_positive = 0;
  for (unsigned k = 0; k < dist.size(); ++k) {
    const double p = dist.probability(k);
    if (p > 0.0) {
      acc += p;
      last_positive = k;
      if (u < acc) {
        return k;
      }
    }
  }
  // u landed in the rounding gap above the last cumulative step.
  return last_positive;
}

std::map<BitString, std::uint64_t> sample_outcomes(const PureState& state,
                                                   std::span<const EquatorialObservable> observables,
                                                   std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) {
    throw std::invalid_argument("sample_outcomes: shots must be >= 1");
  }
  const OutcomeDistribution dist = outcome_distribution(state, observables);
  const int n = dist.qubit_count();

  std::vector<std::uint64_t> counts(dist.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    // 53-bit uniform in [0, 1); mt19937_64 output is fully specified, so the
    // draw sequence is identical on every platform.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    ++counts[draw_outcome(dist, u)];
  }

  std::map<BitString, std::uint64_t> result;
  for (unsigned k = 0; k < dist.size(); ++k) {
    result[BitString::from_index(k, n)] = counts[k];
  }
  return result;
}

}  // namespace ghzlab
