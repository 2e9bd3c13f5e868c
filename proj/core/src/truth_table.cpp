#include "ghzlab/truth_table.hpp"

#include <stdexcept>
#include <string>

namespace ghzlab {

TruthTable::TruthTable(int arity, std::uint64_t mask) : arity_(arity), mask_(mask) {
  if (arity < 0 || arity > kMaxArity) {
    throw std::invalid_argument("TruthTable: arity must be in [0, 6], got " +
                                std::to_string(arity));
  }
  if (arity < kMaxArity && (mask >> (std::uint64_t{1} << arity)) != 0) {
    throw std::invalid_argument("TruthTable: mask has bits above position 2^arity - 1");
  }
}

int TruthTable::evaluate(const BitString& input) const {
  if (input.size() != arity_) {
    throw std::invalid_argument("TruthTable: input length " + std::to_string(input.size()) +
                                " does not match arity " + std::to_string(arity_));
  }
  return output_bit(input.index());
}

TruthTableRange::TruthTableRange(int arity) : arity_(arity) {
  if (arity < 0 || arity > TruthTable::kMaxArity) {
    throw std::invalid_argument("enumerate_tables: arity must be in [0, 6], got " +
                                std::to_string(arity));
  }
  const int domain = 1 << arity;
  last_ = (domain == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << domain) - 1;
}

std::uint64_t TruthTableRange::count() const {
  if (arity_ > 5) {
    throw std::invalid_argument("TruthTableRange: count for arity 6 exceeds uint64");
  }
  return last_ + 1;
}

TruthTableRange enumerate_tables(int arity) { return TruthTableRange(arity); }

TruthTable from_anf_2bit(int alpha, int beta, int gamma, int delta) {
  std::uint64_t mask = 0;
  for (unsigned k = 0; k < 4; ++k) {
    const int s0 = (k >> 1) & 1;
    const int s1 = k & 1;
    const int out = ((alpha & 1) & s0) ^ ((beta & 1) & s1) ^ ((gamma & 1) & (s0 & s1)) ^ (delta & 1);
    mask |= static_cast<std::uint64_t>(out) << k;
  }
  return TruthTable(2, mask);
}

}  // namespace ghzlab
