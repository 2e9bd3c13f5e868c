#pragma once

#include <cstdint>
#include <iterator>

#include "ghzlab/bits.hpp"

namespace ghzlab {

// Boolean function on `arity` input bits, outputs packed into a bitmask.
// Bit k of the mask is the output on the input whose integer encoding is k
// (first input bit most significant). Storing functions as integers makes
// strategy and encoder enumeration plain integer iteration.
class TruthTable {
 public:
  static constexpr int kMaxArity = 6;

  TruthTable(int arity, std::uint64_t mask);

  int arity() const { return arity_; }
  std::uint64_t mask() const { return mask_; }
  std::uint64_t domain_size() const { return std::uint64_t{1} << arity_; }

  int evaluate(const BitString& input) const;

  // Output bit on the input whose integer encoding is `k`.
  int output_bit(unsigned k) const { return static_cast<int>((mask_ >> k) & 1); }

  friend constexpr auto operator<=>(const TruthTable&, const TruthTable&) = default;

 private:
  int arity_;
  std::uint64_t mask_;
};

// Lazy sequence of all 2^(2^arity) truth tables on `arity` bits, in ascending
// mask order. Lazy so that arity 5 and 6 stay iterable without materializing
// the sequence.
class TruthTableRange {
 public:
  class iterator {
   public:
    using value_type = TruthTable;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(int arity, std::uint64_t mask, std::uint64_t last, bool done)
        : arity_(arity), mask_(mask), last_(last), done_(done) {}

    TruthTable operator*() const { return TruthTable(arity_, mask_); }

    iterator& operator++() {
      if (mask_ == last_) {
        done_ = true;
      } else {
        ++mask_;
      }
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_ && (a.done_ || a.mask_ == b.mask_);
    }

   private:
    int arity_ = 0;
    std::uint64_t mask_ = 0;
    std::uint64_t last_ = 0;
    bool done_ = true;
  };

  explicit TruthTableRange(int arity);

  iterator begin() const { return iterator(arity_, 0, last_, false); }
  iterator end() const { return iterator(arity_, 0, last_, true); }

  // Number of tables in the range; only representable for arity <= 5.
  std::uint64_t count() const;

 private:
  int arity_;
  std::uint64_t last_;
};

// All boolean functions on `arity` bits, 0 <= arity <= 6.
TruthTableRange enumerate_tables(int arity);

// Arity-2 table of g(s0, s1) = alpha*s0 XOR beta*s1 XOR gamma*s0*s1 XOR delta.
// Ranging over all 16 coefficient tuples produces every arity-2 function
// exactly once.
TruthTable from_anf_2bit(int alpha, int beta, int gamma, int delta);

}  // namespace ghzlab
