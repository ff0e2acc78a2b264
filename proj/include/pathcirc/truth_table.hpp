#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pathcirc/bit_vector.hpp"
#include "pathcirc/errors.hpp"

namespace pathcirc {

// Explicit total function from in_width bits to out_width bits. Row r holds
// the output for the input whose big-endian value is r.
class TruthTable {
 public:
  TruthTable(std::size_t in_width, std::size_t out_width)
      : in_width_(in_width), out_width_(out_width) {
    if (in_width >= 32) throw BudgetError("truth table input width " + std::to_string(in_width));
    if (out_width > 64) throw WidthError("truth table output width above 64");
    rows_.assign(std::size_t{1} << in_width, 0);
  }

  static TruthTable from_function(std::size_t in_width, std::size_t out_width,
                                  const std::function<BitVector(const BitVector&)>& fn) {
    TruthTable t(in_width, out_width);
    for (std::uint64_t r = 0; r < t.row_count(); ++r) t.set(r, fn(BitVector::from_uint(r, in_width)));
    return t;
  }

  std::size_t in_width() const noexcept { return in_width_; }
  std::size_t out_width() const noexcept { return out_width_; }
  std::uint64_t row_count() const noexcept { return rows_.size(); }

  std::uint64_t row_value(std::uint64_t r) const { return rows_.at(r); }
  BitVector row(std::uint64_t r) const { return BitVector::from_uint(rows_.at(r), out_width_); }
  BitVector operator()(const BitVector& in) const {
    if (in.width() != in_width_) throw WidthError("truth table lookup width mismatch");
    return row(in.to_uint());
  }

  // Output bit `bit` (0 = first output wire) of row r.
  bool bit(std::uint64_t r, std::size_t bit) const {
    return ((rows_.at(r) >> (out_width_ - 1 - bit)) & 1U) != 0;
  }

  void set(std::uint64_t r, const BitVector& value) {
    if (value.width() != out_width_) throw WidthError("truth table row width mismatch");
    rows_.at(r) = value.to_uint();
  }
  void set(std::uint64_t r, std::uint64_t value) { rows_.at(r) = value; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::size_t in_width_;
  std::size_t out_width_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace pathcirc
