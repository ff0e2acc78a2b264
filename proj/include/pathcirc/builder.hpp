#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pathcirc/circuit.hpp"

namespace pathcirc {

// Incremental construction of a Circuit. Gate outputs are numbered
// sequentially after the inputs, which is the canonical numbering every
// constructor in this library produces. Linearity is checked once, when
// `finish` hands the gate list to Circuit.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::size_t n_inputs) : n_inputs_(n_inputs), next_(static_cast<WireId>(n_inputs)) {}

  std::size_t n_inputs() const noexcept { return n_inputs_; }
  WireId input(std::size_t i) const noexcept { return static_cast<WireId>(i); }

  std::vector<WireId> inputs(std::size_t first = 0, std::size_t count = npos) const {
    if (count == npos) count = n_inputs_ - first;
    std::vector<WireId> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<WireId>(first + i);
    return out;
  }

  WireId nand(WireId a, WireId b) {
    Gate g{GateKind::Nand, {a, b}, {next_, 0}};
    gates_.push_back(g);
    return next_++;
  }

  std::pair<WireId, WireId> copy(WireId a) {
    Gate g{GateKind::Copy, {a, 0}, {next_, static_cast<WireId>(next_ + 1)}};
    gates_.push_back(g);
    next_ += 2;
    return {g.out[0], g.out[1]};
  }

  WireId constant(bool value) {
    Gate g{value ? GateKind::True : GateKind::False, {}, {next_, 0}};
    gates_.push_back(g);
    return next_++;
  }

  // n copies of `a` through a left-leaning binary COPY tree: the first output
  // of each COPY is split again, the second one is emitted.
  std::vector<WireId> fanout(WireId a, std::size_t n) {
    if (n == 0) return {};
    std::vector<WireId> out(n);
    WireId cur = a;
    for (std::size_t i = n - 1; i > 0; --i) {
      auto [left, right] = copy(cur);
      out[i] = right;
      cur = left;
    }
    out[0] = cur;
    return out;
  }

  WireId not_gate(WireId a) {
    auto [x, y] = copy(a);
    return nand(x, y);
  }

  WireId and_gate(WireId a, WireId b) { return not_gate(nand(a, b)); }

  WireId or_gate(WireId a, WireId b) { return nand(not_gate(a), not_gate(b)); }

  WireId xor_gate(WireId a, WireId b) {
    auto [a1, a2] = copy(a);
    auto [b1, b2] = copy(b);
    auto [t1, t2] = copy(nand(a1, b1));
    return nand(nand(a2, t1), nand(b2, t2));
  }

  WireId xnor_gate(WireId a, WireId b) { return not_gate(xor_gate(a, b)); }

  // Left-leaning AND(AND(AND(x1,x2),x3),...); TRUE when empty.
  WireId and_all(std::span<const WireId> xs) {
    if (xs.empty()) return constant(true);
    WireId acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = and_gate(acc, xs[i]);
    return acc;
  }

  // Left-leaning OR tree; FALSE when empty.
  WireId or_all(std::span<const WireId> xs) {
    if (xs.empty()) return constant(false);
    WireId acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = or_gate(acc, xs[i]);
    return acc;
  }

  // Splices `c` in, feeding its inputs from `in`; returns the wires carrying its outputs.
  std::vector<WireId> embed(const Circuit& c, std::span<const WireId> in) {
    if (in.size() != c.n_inputs()) {
      throw WidthError("embedded circuit expects " + std::to_string(c.n_inputs()) +
                       " wires, got " + std::to_string(in.size()));
    }
    std::vector<WireId> map(c.wire_count());
    for (std::size_t i = 0; i < in.size(); ++i) map[i] = in[i];
    gates_.reserve(gates_.size() + c.gate_count());
    for (const auto& g : c.gates()) {
      Gate ng{g.kind, {}, {}};
      for (std::size_t i = 0; i < input_arity(g.kind); ++i) ng.in[i] = map[g.in[i]];
      for (std::size_t i = 0; i < output_arity(g.kind); ++i) {
        ng.out[i] = next_;
        map[g.out[i]] = next_++;
      }
      gates_.push_back(ng);
    }
    std::vector<WireId> out;
    out.reserve(c.n_outputs());
    for (auto w : c.output_map()) out.push_back(map[w]);
    return out;
  }

  std::size_t gate_count() const noexcept { return gates_.size(); }

  Circuit finish(std::vector<WireId> outputs) && {
    return Circuit(n_inputs_, std::move(gates_), std::move(outputs));
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t n_inputs_;
  WireId next_;
  std::vector<Gate> gates_;
};

}  // namespace pathcirc
