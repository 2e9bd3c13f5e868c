#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace ghzlab {

// Ordered bit sequence of length 0..6. The first bit is the most significant
// when the sequence is read as an integer index; this convention is fixed
// across the whole library.
class BitString {
 public:
  static constexpr int kMaxBits = 6;

  constexpr BitString() = default;

  BitString(std::initializer_list<int> bits) {
    for (int b : bits) {
      push_back(b);
    }
  }

  // Decodes `index` into `length` bits, first bit most significant.
  static BitString from_index(unsigned index, int length) {
    if (length < 0 || length > kMaxBits) {
      throw std::invalid_argument("BitString: length out of range");
    }
    if (index >= (1u << length)) {
      throw std::invalid_argument("BitString: index out of range");
    }
    BitString s;
    s.len_ = static_cast<std::uint8_t>(length);
    s.bits_ = static_cast<std::uint8_t>(index);
    return s;
  }

  void push_back(int bit) {
    if (bit != 0 && bit != 1) {
      throw std::invalid_argument("BitString: bit must be 0 or 1");
    }
    if (len_ == kMaxBits) {
      throw std::invalid_argument("BitString: more than 6 bits");
    }
    bits_ = static_cast<std::uint8_t>((bits_ << 1) | bit);
    ++len_;
  }

  int size() const { return len_; }
  bool empty() const { return len_ == 0; }

  // i-th bit from the front (i = 0 is the most significant).
  int bit(int i) const {
    if (i < 0 || i >= len_) {
      throw std::out_of_range("BitString: bit index out of range");
    }
    return (bits_ >> (len_ - 1 - i)) & 1;
  }

  // Integer encoding of the sequence.
  unsigned index() const { return bits_; }

  BitString concat(const BitString& other) const {
    BitString s = *this;
    for (int i = 0; i < other.size(); ++i) {
      s.push_back(other.bit(i));
    }
    return s;
  }

  std::string str() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i = 0; i < len_; ++i) {
      s[static_cast<std::size_t>(i)] = static_cast<char>('0' + bit(i));
    }
    return s;
  }

  friend constexpr auto operator<=>(const BitString&, const BitString&) = default;

 private:
  std::uint8_t len_ = 0;
  std::uint8_t bits_ = 0;
};

}  // namespace ghzlab
