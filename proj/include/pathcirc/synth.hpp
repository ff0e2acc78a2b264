#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pathcirc/algebra.hpp"
#include "pathcirc/bit_vector.hpp"
#include "pathcirc/budget.hpp"
#include "pathcirc/builder.hpp"
#include "pathcirc/circuit.hpp"
#include "pathcirc/enumeration.hpp"
#include "pathcirc/graph.hpp"
#include "pathcirc/truth_table.hpp"

namespace pathcirc {

// Disjunctive normal form of a single output column: one AND term per row
// whose bit is 1, OR-ed together. No minimization.
inline Circuit synth_bit(const TruthTable& t, std::size_t bit) {
  const std::size_t w = t.in_width();
  std::vector<std::uint64_t> minterms;
  for (std::uint64_t r = 0; r < t.row_count(); ++r) {
    if (t.bit(r, bit)) minterms.push_back(r);
  }
  CircuitBuilder b(w);
  std::vector<std::vector<WireId>> copies(w);
  for (std::size_t i = 0; i < w; ++i) copies[i] = b.fanout(b.input(i), minterms.size());

  std::vector<WireId> terms;
  terms.reserve(minterms.size());
  std::vector<WireId> literals(w);
  for (std::size_t k = 0; k < minterms.size(); ++k) {
    for (std::size_t i = 0; i < w; ++i) {
      bool positive = ((minterms[k] >> (w - 1 - i)) & 1U) != 0;
      literals[i] = positive ? copies[i][k] : b.not_gate(copies[i][k]);
    }
    terms.push_back(b.and_all(literals));
  }
  return std::move(b).finish({b.or_all(terms)});
}

// Lowers a truth table to a circuit: the input bus is copied once per output
// bit and the per-bit DNF circuits are tensored side by side.
inline Circuit synth(const TruthTable& t, const Budget& budget = {}) {
  if (t.in_width() > budget.max_synth_width) {
    throw BudgetError("synth: input width " + std::to_string(t.in_width()) + " exceeds budget " +
                      std::to_string(budget.max_synth_width));
  }
  if (t.out_width() == 0) return discard(t.in_width());
  std::vector<Circuit> bits;
  bits.reserve(t.out_width());
  for (std::size_t j = 0; j < t.out_width(); ++j) bits.push_back(synth_bit(t, j));
  return seq(copy_bus(t.in_width(), t.out_width()), tensor_all(bits));
}

// MATCH_w: 2w inputs (x then y), output 1 iff x == y and x is not all-zero.
// Built structurally so it scales with w: XNOR per bit into an AND tree,
// AND-ed with an OR tree over x.
inline Circuit match_circuit(std::size_t w) {
  if (w == 0) throw WidthError("match_circuit needs w >= 1");
  CircuitBuilder b(2 * w);
  std::vector<WireId> eq(w);
  std::vector<WireId> nonzero(w);
  for (std::size_t i = 0; i < w; ++i) {
    auto [x_eq, x_nz] = b.copy(b.input(i));
    eq[i] = b.xnor_gate(x_eq, b.input(w + i));
    nonzero[i] = x_nz;
  }
  auto all_equal = b.and_all(eq);
  auto any_set = b.or_all(nonzero);
  return std::move(b).finish({b.and_gate(all_equal, any_set)});
}

// Point function on s: NOT on the 0 positions, then a left-leaning AND tree.
inline Circuit filter_circuit(const BitVector& s) {
  if (s.width() == 0) throw WidthError("filter_circuit needs a non-empty bit string");
  CircuitBuilder b(s.width());
  std::vector<WireId> literals(s.width());
  for (std::size_t i = 0; i < s.width(); ++i) {
    literals[i] = s[i] ? b.input(i) : b.not_gate(b.input(i));
  }
  return std::move(b).finish({b.and_all(literals)});
}

// S_G: step code -> source vertex code.
inline Circuit source_circuit(const Graph& g, const Enumeration& en, const Budget& budget = {}) {
  return synth(source_table(en, g), budget);
}

// T_G: step code -> target vertex code.
inline Circuit target_circuit(const Graph& g, const Enumeration& en, const Budget& budget = {}) {
  return synth(target_table(en, g), budget);
}

// Vertex code -> 1 iff it names a vertex of the enumeration.
inline Circuit vertex_check_circuit(const Enumeration& en, const Budget& budget = {}) {
  return synth(vertex_table(en), budget);
}

}  // namespace pathcirc
