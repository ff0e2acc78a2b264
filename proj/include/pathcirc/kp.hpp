#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pathcirc/algebra.hpp"
#include "pathcirc/bit_vector.hpp"
#include "pathcirc/budget.hpp"
#include "pathcirc/circuit.hpp"
#include "pathcirc/enumeration.hpp"
#include "pathcirc/errors.hpp"
#include "pathcirc/graph.hpp"
#include "pathcirc/synth.hpp"

namespace pathcirc {

// A knowledge-proof circuit A -> B: a plain circuit
//   state-in (A) ++ witness (X^n)  ->  flag ++ state-out (B)
// where the flag is output wire 0.
class KpMorphism {
 public:
  struct Result {
    bool flag = false;
    BitVector state;
  };

  KpMorphism(std::size_t in_width, std::size_t witness_width, std::size_t out_width, Circuit circuit)
      : in_width_(in_width), witness_width_(witness_width), out_width_(out_width),
        circuit_(std::move(circuit)) {
    if (circuit_.n_inputs() != in_width_ + witness_width_ || circuit_.n_outputs() != 1 + out_width_) {
      throw WidthError("circuit of shape " + std::to_string(circuit_.n_inputs()) + "->" +
                       std::to_string(circuit_.n_outputs()) + " does not fit partition (" +
                       std::to_string(in_width_) + "+" + std::to_string(witness_width_) + ")->(1+" +
                       std::to_string(out_width_) + ")");
    }
  }

  std::size_t in_width() const noexcept { return in_width_; }
  std::size_t witness_width() const noexcept { return witness_width_; }
  std::size_t out_width() const noexcept { return out_width_; }
  const Circuit& circuit() const noexcept { return circuit_; }

  Result eval(const BitVector& state, const BitVector& witness) const {
    auto out = circuit_.eval(state + witness);
    return {out[0], out.slice(1, out_width_)};
  }

 private:
  std::size_t in_width_;
  std::size_t witness_width_;
  std::size_t out_width_;
  Circuit circuit_;
};

// TRUE ⊗ Id_w: no witness, flag constantly 1.
inline KpMorphism kp_identity(std::size_t w) {
  return KpMorphism(w, 0, w, tensor(primitive(GateKind::True), identity(w)));
}

// (f ⊗ Id);(Id_X ⊗ g);(AND ⊗ Id). f's witness block comes first.
inline KpMorphism kp_compose(const KpMorphism& f, const KpMorphism& g) {
  if (f.out_width() != g.in_width()) {
    throw WidthError("kp_compose: f outputs " + std::to_string(f.out_width()) +
                     " state bits but g expects " + std::to_string(g.in_width()));
  }
  auto c = seq({tensor(f.circuit(), identity(g.witness_width())),
                tensor(identity(1), g.circuit()),
                tensor(derived_gate(DerivedGate::And), identity(g.out_width()))});
  return KpMorphism(f.in_width(), f.witness_width() + g.witness_width(), g.out_width(), std::move(c));
}

// The circuit checking one fixed step: the step's code comes from constant
// gates, the incoming vertex must match its source, and its target is emitted
// regardless of the flag.
inline KpMorphism edge_evaluator(const Graph& g, const Enumeration& en, const Step& step,
                                 const Budget& budget = {}) {
  if ((step.is_identity() && step.index >= g.vertex_count()) ||
      (!step.is_identity() && step.index >= g.edge_count())) {
    throw LookupError(std::string(step.is_identity() ? "identity on vertex " : "edge ") +
                      std::to_string(step.index) + " is not in the graph");
  }
  const auto v = en.v_bits();
  const auto e = en.e_bits();
  auto c = seq({tensor(identity(v), constant(en.step_code(step))),
                tensor(identity(v), copy_bus(e)),
                tensor({identity(v), source_circuit(g, en, budget), target_circuit(g, en, budget)}),
                tensor(match_circuit(v), identity(v))});
  return KpMorphism(v, 0, v, std::move(c));
}

// (Id ⊗ COPY);(Id ⊗ S_G ⊗ T_G);(MATCH ⊗ Id), with the step code as witness.
inline KpMorphism step_verifier(const Graph& g, const Enumeration& en, const Budget& budget = {}) {
  const auto v = en.v_bits();
  const auto e = en.e_bits();
  auto c = seq({tensor(identity(v), copy_bus(e)),
                tensor({identity(v), source_circuit(g, en, budget), target_circuit(g, en, budget)}),
                tensor(match_circuit(v), identity(v))});
  return KpMorphism(v, e, v, std::move(c));
}

// Zero-step verifier: accepts exactly the assigned vertex codes and passes the
// state through.
inline KpMorphism vertex_verifier(const Enumeration& en, const Budget& budget = {}) {
  const auto v = en.v_bits();
  auto c = seq(copy_bus(v), tensor(vertex_check_circuit(en, budget), identity(v)));
  return KpMorphism(v, 0, v, std::move(c));
}

// k-fold left-associated composition of step_verifier. The flag is 1 iff the
// k witness codes form a walk from the input vertex; the state output is
// meaningful only when the flag is 1.
inline KpMorphism path_verifier(const Graph& g, const Enumeration& en, std::size_t k,
                                const Budget& budget = {}) {
  if (k == 0) return vertex_verifier(en, budget);
  auto step = step_verifier(g, en, budget);
  // Each composition adds one AND (three gates).
  const std::size_t estimate = k * step.circuit().gate_count() + 3 * (k - 1);
  if (step.circuit().gate_count() != 0 && estimate / step.circuit().gate_count() < k - 1) {
    throw BudgetError("path_verifier: gate count overflows");
  }
  if (estimate > budget.max_gates) {
    throw BudgetError("path_verifier: " + std::to_string(k) + " steps need about " +
                      std::to_string(estimate) + " gates, budget is " +
                      std::to_string(budget.max_gates));
  }
  KpMorphism acc = step;
  for (std::size_t i = 1; i < k; ++i) acc = kp_compose(acc, step);
  return acc;
}

// Composite of the fixed-step evaluators along p. The empty path maps to
// vertex_verifier, matching path_verifier(g, en, 0).
inline KpMorphism path_proof(const Graph& g, const Enumeration& en, const Path& p,
                             const Budget& budget = {}) {
  KpMorphism acc = vertex_verifier(en, budget);
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    auto ev = edge_evaluator(g, en, p.steps[i], budget);
    acc = i == 0 ? ev : kp_compose(acc, ev);
  }
  return acc;
}

// Step codes of p followed by identities on its end vertex, k codes in total.
inline std::vector<BitVector> pad_path(const Graph& g, const Enumeration& en, const Path& p,
                                       std::size_t k) {
  if (p.steps.size() > k) {
    throw LengthError("path has " + std::to_string(p.steps.size()) + " steps, verifier takes " +
                      std::to_string(k));
  }
  std::vector<BitVector> codes;
  codes.reserve(k);
  for (const auto& s : p.steps) codes.push_back(en.step_code(s));
  const auto pad = en.identity_code(end_vertex(g, p));
  while (codes.size() < k) codes.push_back(pad);
  return codes;
}

// (f ⊗ Id_B);(Id_X ⊗ MATCH_B);AND over inputs state ++ witness ++ claim:
// 1 iff f accepts and its state output equals the non-zero claim.
inline Circuit snarkize(const KpMorphism& f) {
  if (f.out_width() == 0) throw WidthError("snarkize needs a non-empty output bus");
  return seq({tensor(f.circuit(), identity(f.out_width())),
              tensor(identity(1), match_circuit(f.out_width())),
              derived_gate(DerivedGate::And)});
}

}  // namespace pathcirc
