#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "pathcirc/errors.hpp"

namespace pathcirc {

// A fixed-width bus value. Bit 0 is the first wire of the bus; when a bus
// carries a binary code, bit 0 is the most significant digit, so the string
// "01" is the code 1 on a 2-wire bus.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t width, bool fill = false) : bits_(width, fill ? 1 : 0) {}
  BitVector(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) bits_.push_back(b != 0 ? 1 : 0);
  }

  static BitVector from_string(std::string_view text) {
    BitVector out;
    out.bits_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c != '0' && c != '1') {
        throw ParseError(std::string("invalid bit character '") + c + "'",
                         "bit " + std::to_string(i));
      }
      out.bits_.push_back(c == '1' ? 1 : 0);
    }
    return out;
  }

  // Big-endian binary code of `value` on `width` wires.
  static BitVector from_uint(std::uint64_t value, std::size_t width) {
    if (width < 64 && (value >> width) != 0) {
      throw WidthError("value " + std::to_string(value) + " does not fit in " +
                       std::to_string(width) + " bits");
    }
    BitVector out(width);
    for (std::size_t i = 0; i < width; ++i) {
      std::size_t shift = width - 1 - i;
      out.bits_[i] = shift < 64 ? static_cast<std::uint8_t>((value >> shift) & 1U) : 0;
    }
    return out;
  }

  std::uint64_t to_uint() const {
    if (bits_.size() > 64) throw WidthError("bit vector wider than 64 bits");
    std::uint64_t v = 0;
    for (auto b : bits_) v = (v << 1) | b;
    return v;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b != 0 ? '1' : '0');
    return s;
  }

  std::size_t width() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool v) { bits_.at(i) = v ? 1 : 0; }
  void push_back(bool v) { bits_.push_back(v ? 1 : 0); }

  // The reserved "undefined" code is the all-zero value.
  bool is_zero() const noexcept {
    for (auto b : bits_) {
      if (b != 0) return false;
    }
    return true;
  }

  BitVector slice(std::size_t offset, std::size_t count) const {
    if (offset + count > bits_.size()) throw WidthError("slice out of range");
    BitVector out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                     bits_.begin() + static_cast<std::ptrdiff_t>(offset + count));
    return out;
  }

  BitVector& append(const BitVector& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    return *this;
  }

  friend BitVector operator+(BitVector lhs, const BitVector& rhs) { return lhs.append(rhs); }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

inline BitVector concat(std::initializer_list<BitVector> parts) {
  BitVector out;
  for (const auto& p : parts) out.append(p);
  return out;
}

// Number of wires needed to hold `count` distinct codes, never less than one.
constexpr std::size_t bits_for(std::uint64_t count) noexcept {
  std::size_t bits = 0;
  while (bits < 64 && (std::uint64_t{1} << bits) < count) ++bits;
  return bits == 0 ? 1 : bits;
}

}  // namespace pathcirc
