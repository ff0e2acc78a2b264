#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pathcirc/bit_vector.hpp"
#include "pathcirc/builder.hpp"
#include "pathcirc/circuit.hpp"
#include "pathcirc/errors.hpp"

// Monoidal structure on circuits: sequential composition, parallel
// composition, wirings, and the derived gates built from the four generators.
namespace pathcirc {

inline Circuit primitive(GateKind kind) {
  CircuitBuilder b(input_arity(kind));
  switch (kind) {
    case GateKind::Nand: {
      auto w = b.nand(b.input(0), b.input(1));
      return std::move(b).finish({w});
    }
    case GateKind::Copy: {
      auto [x, y] = b.copy(b.input(0));
      return std::move(b).finish({x, y});
    }
    case GateKind::True: return std::move(b).finish({b.constant(true)});
    case GateKind::False: return std::move(b).finish({b.constant(false)});
  }
  throw ValidationError("unknown gate kind");
}

// A gate-free circuit whose i-th output is input `sources[i]`. Inputs not
// listed are discarded.
inline Circuit wiring(std::size_t n_inputs, std::vector<WireId> sources) {
  return Circuit(n_inputs, {}, std::move(sources));
}

inline Circuit identity(std::size_t width) {
  std::vector<WireId> map(width);
  std::iota(map.begin(), map.end(), WireId{0});
  return wiring(width, std::move(map));
}

// x ++ y  ->  y ++ x, with |x| = w1 and |y| = w2.
inline Circuit symmetry(std::size_t w1, std::size_t w2) {
  std::vector<WireId> map;
  map.reserve(w1 + w2);
  for (std::size_t i = 0; i < w2; ++i) map.push_back(static_cast<WireId>(w1 + i));
  for (std::size_t i = 0; i < w1; ++i) map.push_back(static_cast<WireId>(i));
  return wiring(w1 + w2, std::move(map));
}

// Inputs are consumed but never read.
inline Circuit discard(std::size_t width) { return wiring(width, {}); }

inline Circuit seq(const Circuit& first, const Circuit& second) {
  if (first.n_outputs() != second.n_inputs()) {
    throw WidthError("seq: first circuit has " + std::to_string(first.n_outputs()) +
                     " outputs but second expects " + std::to_string(second.n_inputs()));
  }
  CircuitBuilder b(first.n_inputs());
  auto mid = b.embed(first, b.inputs());
  auto out = b.embed(second, mid);
  return std::move(b).finish(std::move(out));
}

inline Circuit seq(std::initializer_list<Circuit> chain) {
  if (chain.size() == 0) throw WidthError("seq of nothing");
  auto it = chain.begin();
  Circuit acc = *it++;
  for (; it != chain.end(); ++it) acc = seq(acc, *it);
  return acc;
}

inline Circuit tensor(const Circuit& top, const Circuit& bottom) {
  CircuitBuilder b(top.n_inputs() + bottom.n_inputs());
  auto out = b.embed(top, b.inputs(0, top.n_inputs()));
  auto rest = b.embed(bottom, b.inputs(top.n_inputs(), bottom.n_inputs()));
  out.insert(out.end(), rest.begin(), rest.end());
  return std::move(b).finish(std::move(out));
}

inline Circuit tensor(std::initializer_list<Circuit> parts) {
  Circuit acc = identity(0);
  for (const auto& p : parts) acc = tensor(acc, p);
  return acc;
}

inline Circuit tensor_all(std::span<const Circuit> parts) {
  std::size_t n_in = 0;
  for (const auto& p : parts) n_in += p.n_inputs();
  CircuitBuilder b(n_in);
  std::vector<WireId> out;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    auto o = b.embed(p, b.inputs(offset, p.n_inputs()));
    out.insert(out.end(), o.begin(), o.end());
    offset += p.n_inputs();
  }
  return std::move(b).finish(std::move(out));
}

// Constant bus: no inputs, outputs `value` through TRUE/FALSE gates.
inline Circuit constant(const BitVector& value) {
  CircuitBuilder b(0);
  std::vector<WireId> out;
  for (std::size_t i = 0; i < value.width(); ++i) out.push_back(b.constant(value[i]));
  return std::move(b).finish(std::move(out));
}

// Duplicates a whole bus: x -> x ++ x ++ ... (`copies` times).
inline Circuit copy_bus(std::size_t width, std::size_t copies = 2) {
  CircuitBuilder b(width);
  std::vector<std::vector<WireId>> per_bit(width);
  for (std::size_t i = 0; i < width; ++i) per_bit[i] = b.fanout(b.input(i), copies);
  std::vector<WireId> out;
  out.reserve(width * copies);
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t i = 0; i < width; ++i) out.push_back(per_bit[i][c]);
  }
  return std::move(b).finish(std::move(out));
}

enum class DerivedGate { Not, And, Or, Xor, AndN, OrN, CopyN };

// Boolean sugar over the generators. `n` is the arity of AND_n / OR_n and the
// fan-out of COPY_n; it is ignored for the fixed-arity gates.
inline Circuit derived_gate(DerivedGate kind, std::size_t n = 2) {
  switch (kind) {
    case DerivedGate::Not: {
      CircuitBuilder b(1);
      return std::move(b).finish({b.not_gate(b.input(0))});
    }
    case DerivedGate::And: {
      CircuitBuilder b(2);
      return std::move(b).finish({b.and_gate(b.input(0), b.input(1))});
    }
    case DerivedGate::Or: {
      CircuitBuilder b(2);
      return std::move(b).finish({b.or_gate(b.input(0), b.input(1))});
    }
    case DerivedGate::Xor: {
      CircuitBuilder b(2);
      return std::move(b).finish({b.xor_gate(b.input(0), b.input(1))});
    }
    case DerivedGate::AndN:
    case DerivedGate::OrN: {
      if (n == 0) throw WidthError("AND_n/OR_n need n >= 1");
      CircuitBuilder b(n);
      auto ins = b.inputs();
      auto w = kind == DerivedGate::AndN ? b.and_all(ins) : b.or_all(ins);
      return std::move(b).finish({w});
    }
    case DerivedGate::CopyN: {
      if (n == 0) throw WidthError("COPY_n needs n >= 1");
      CircuitBuilder b(1);
      return std::move(b).finish(b.fanout(b.input(0), n));
    }
  }
  throw ValidationError("unknown derived gate");
}

}  // namespace pathcirc
