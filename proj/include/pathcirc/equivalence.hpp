#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pathcirc/bit_vector.hpp"
#include "pathcirc/circuit.hpp"
#include "pathcirc/errors.hpp"

namespace pathcirc {

namespace detail {
inline constexpr std::array<std::uint64_t, 6> kLanePattern = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
}  // namespace detail

// Walks all 2^width assignments of `width` wires, 64 per call. Assignment
// number x puts bit (width-1-i) of x on wire i, so x read as a binary number
// is the input string written most-significant wire first. The callback gets
// the lane words, the number of the first assignment, and a mask of live lanes.
template <typename Fn>
void for_each_input_batch(std::size_t width, Fn&& fn) {
  if (width >= 63) throw BudgetError("cannot enumerate 2^" + std::to_string(width) + " inputs");
  const std::uint64_t total = std::uint64_t{1} << width;
  std::vector<std::uint64_t> lanes(width);
  for (std::uint64_t base = 0; base < total; base += 64) {
    const std::uint64_t live = total - base >= 64 ? ~std::uint64_t{0}
                                                  : ((std::uint64_t{1} << (total - base)) - 1);
    for (std::size_t i = 0; i < width; ++i) {
      std::size_t shift = width - 1 - i;
      lanes[i] = shift < 6 ? detail::kLanePattern[shift]
                           : (((base >> shift) & 1U) != 0 ? ~std::uint64_t{0} : 0);
    }
    fn(std::span<const std::uint64_t>(lanes), base, live);
  }
}

// Extracts lane `lane` of a batch result as a BitVector.
inline BitVector lane_value(std::span<const std::uint64_t> words, std::size_t lane) {
  BitVector out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out.set(i, ((words[i] >> lane) & 1U) != 0);
  return out;
}

// Extensional equality by exhaustive evaluation; refuses inputs wider than
// `max_width` so the 2^n sweep stays bounded.
inline bool ext_equal(const Circuit& a, const Circuit& b, std::size_t max_width = 20) {
  if (a.n_inputs() != b.n_inputs() || a.n_outputs() != b.n_outputs()) {
    throw WidthError("ext_equal: circuits have shapes " + std::to_string(a.n_inputs()) + "->" +
                     std::to_string(a.n_outputs()) + " and " + std::to_string(b.n_inputs()) +
                     "->" + std::to_string(b.n_outputs()));
  }
  if (a.n_inputs() > max_width) {
    throw BudgetError("ext_equal: input width " + std::to_string(a.n_inputs()) +
                      " exceeds budget " + std::to_string(max_width));
  }
  bool equal = true;
  for_each_input_batch(a.n_inputs(), [&](std::span<const std::uint64_t> in, std::uint64_t,
                                         std::uint64_t live) {
    if (!equal) return;
    auto ra = a.eval_lanes(in);
    auto rb = b.eval_lanes(in);
    for (std::size_t i = 0; i < ra.size(); ++i) {
      if (((ra[i] ^ rb[i]) & live) != 0) {
        equal = false;
        return;
      }
    }
  });
  return equal;
}

}  // namespace pathcirc
