#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathcirc/bit_vector.hpp"
#include "pathcirc/errors.hpp"

namespace pathcirc {

using WireId = std::uint32_t;

// The fixed, functionally complete generator set.
enum class GateKind : std::uint8_t { Nand, Copy, True, False };

constexpr std::size_t input_arity(GateKind k) noexcept {
  switch (k) {
    case GateKind::Nand: return 2;
    case GateKind::Copy: return 1;
    case GateKind::True:
    case GateKind::False: return 0;
  }
  return 0;
}

constexpr std::size_t output_arity(GateKind k) noexcept {
  return k == GateKind::Copy ? 2 : 1;
}

constexpr std::string_view gate_name(GateKind k) noexcept {
  switch (k) {
    case GateKind::Nand: return "NAND";
    case GateKind::Copy: return "COPY";
    case GateKind::True: return "TRUE";
    case GateKind::False: return "FALSE";
  }
  return "?";
}

inline GateKind gate_from_name(std::string_view name) {
  if (name == "NAND") return GateKind::Nand;
  if (name == "COPY") return GateKind::Copy;
  if (name == "TRUE") return GateKind::True;
  if (name == "FALSE") return GateKind::False;
  throw ParseError("unknown gate op '" + std::string(name) + "'");
}

struct Gate {
  GateKind kind = GateKind::False;
  std::array<WireId, 2> in{};
  std::array<WireId, 2> out{};

  std::span<const WireId> inputs() const noexcept { return {in.data(), input_arity(kind)}; }
  std::span<const WireId> outputs() const noexcept { return {out.data(), output_arity(kind)}; }

  friend bool operator==(const Gate& a, const Gate& b) noexcept {
    if (a.kind != b.kind) return false;
    for (std::size_t i = 0; i < input_arity(a.kind); ++i) {
      if (a.in[i] != b.in[i]) return false;
    }
    for (std::size_t i = 0; i < output_arity(a.kind); ++i) {
      if (a.out[i] != b.out[i]) return false;
    }
    return true;
  }
};

// An immutable gate-list DAG. Wires 0..n_inputs-1 are the circuit inputs;
// every gate output introduces a fresh wire, and all wire ids live in
// [0, n_inputs + total gate outputs). Wires are linear: each one is read at
// most once, by a gate or by the output map, so fan-out always goes through
// COPY. Unread wires are discarded.
class Circuit {
 public:
  Circuit() = default;

  Circuit(std::size_t n_inputs, std::vector<Gate> gates, std::vector<WireId> output_map)
      : n_inputs_(n_inputs), gates_(std::move(gates)), output_map_(std::move(output_map)) {
    validate();
  }

  std::size_t n_inputs() const noexcept { return n_inputs_; }
  std::size_t n_outputs() const noexcept { return output_map_.size(); }
  std::size_t wire_count() const noexcept { return wire_count_; }
  std::size_t gate_count() const noexcept { return gates_.size(); }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<WireId>& output_map() const noexcept { return output_map_; }

  std::size_t count(GateKind kind) const noexcept {
    std::size_t n = 0;
    for (const auto& g : gates_) n += g.kind == kind ? 1 : 0;
    return n;
  }

  // Evaluates 64 independent input assignments at once: bit `j` of word `i`
  // is the value of input wire `i` in lane `j`.
  std::vector<std::uint64_t> eval_lanes(std::span<const std::uint64_t> inputs) const {
    if (inputs.size() != n_inputs_) {
      throw WidthError("circuit expects " + std::to_string(n_inputs_) + " inputs, got " +
                       std::to_string(inputs.size()));
    }
    std::vector<std::uint64_t> wire(wire_count_, 0);
    std::copy(inputs.begin(), inputs.end(), wire.begin());
    for (const auto& g : gates_) {
      switch (g.kind) {
        case GateKind::Nand: wire[g.out[0]] = ~(wire[g.in[0]] & wire[g.in[1]]); break;
        case GateKind::Copy:
          wire[g.out[0]] = wire[g.in[0]];
          wire[g.out[1]] = wire[g.in[0]];
          break;
        case GateKind::True: wire[g.out[0]] = ~std::uint64_t{0}; break;
        case GateKind::False: wire[g.out[0]] = 0; break;
      }
    }
    std::vector<std::uint64_t> out;
    out.reserve(output_map_.size());
    for (auto w : output_map_) out.push_back(wire[w]);
    return out;
  }

  BitVector eval(const BitVector& input) const {
    if (input.width() != n_inputs_) {
      throw WidthError("circuit expects " + std::to_string(n_inputs_) + " input bits, got " +
                       std::to_string(input.width()));
    }
    std::vector<std::uint64_t> lanes(n_inputs_);
    for (std::size_t i = 0; i < n_inputs_; ++i) lanes[i] = input[i] ? 1 : 0;
    auto out = eval_lanes(lanes);
    BitVector result(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) result.set(i, (out[i] & 1U) != 0);
    return result;
  }

  // Gate-for-gate identity, not extensional equality.
  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void validate() {
    std::size_t total = n_inputs_;
    for (const auto& g : gates_) total += output_arity(g.kind);
    if (total > 0xFFFFFFFFULL) throw ValidationError("too many wires");
    wire_count_ = total;

    std::vector<std::uint8_t> defined(total, 0);
    std::vector<std::uint8_t> read(total, 0);
    for (std::size_t i = 0; i < n_inputs_; ++i) defined[i] = 1;

    auto consume = [&](WireId w, const std::string& where) {
      if (w >= total || defined[w] == 0) {
        throw ValidationError(where + " reads undefined wire " + std::to_string(w));
      }
      if (read[w] != 0) {
        throw ValidationError(where + " reads wire " + std::to_string(w) +
                              " which is already consumed (fan-out requires COPY)");
      }
      read[w] = 1;
    };

    for (std::size_t gi = 0; gi < gates_.size(); ++gi) {
      const auto& g = gates_[gi];
      std::string where = "gate " + std::to_string(gi) + " (" + std::string(gate_name(g.kind)) + ")";
      for (auto w : g.inputs()) consume(w, where);
      for (auto w : g.outputs()) {
        if (w >= total) {
          throw ValidationError(where + " writes wire " + std::to_string(w) + " outside [0, " +
                                std::to_string(total) + ")");
        }
        if (defined[w] != 0) {
          throw ValidationError(where + " redefines wire " + std::to_string(w));
        }
        defined[w] = 1;
      }
    }
    for (std::size_t i = 0; i < output_map_.size(); ++i) {
      consume(output_map_[i], "output " + std::to_string(i));
    }
  }

  std::size_t n_inputs_ = 0;
  std::vector<Gate> gates_;
  std::vector<WireId> output_map_;
  std::size_t wire_count_ = 0;
};

}  // namespace pathcirc
