#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathcirc/bit_vector.hpp"
#include "pathcirc/errors.hpp"
#include "pathcirc/graph.hpp"
#include "pathcirc/truth_table.hpp"

namespace pathcirc {

// Binary codes for the vertices and steps of a graph.
//
// Vertex codes use v_bits wires and never take the all-zero value, which
// stands for "undefined". Step codes use e_bits wires; the first |V| values
// are the identities on v_1..v_n and real edges start at |V|. Assignment is
// sequential in declaration order: v_i -> i, Id(v_i) -> i-1, e_j -> |V|+j-1
// (1-based i, j). Codes above the last assigned value are unassigned.
class Enumeration {
 public:
  Enumeration() = default;

  std::size_t v_bits() const noexcept { return v_bits_; }
  std::size_t e_bits() const noexcept { return e_bits_; }
  std::size_t vertex_count() const noexcept { return n_vertices_; }
  std::size_t edge_count() const noexcept { return n_edges_; }

  BitVector zero_vertex() const { return BitVector(v_bits_); }

  BitVector vertex_code(std::size_t v) const {
    check_vertex(v);
    return BitVector::from_uint(v + 1, v_bits_);
  }

  BitVector identity_code(std::size_t v) const {
    check_vertex(v);
    return BitVector::from_uint(v, e_bits_);
  }

  BitVector edge_code(std::size_t e) const {
    if (e >= n_edges_) throw LookupError("edge index " + std::to_string(e) + " out of range");
    return BitVector::from_uint(n_vertices_ + e, e_bits_);
  }

  BitVector step_code(const Step& s) const {
    return s.is_identity() ? identity_code(s.index) : edge_code(s.index);
  }

  std::optional<std::size_t> decode_vertex(const BitVector& code) const {
    if (code.width() != v_bits_) throw WidthError("vertex code width mismatch");
    auto value = code.to_uint();
    if (value == 0 || value > n_vertices_) return std::nullopt;
    return static_cast<std::size_t>(value - 1);
  }

  std::optional<Step> decode_step(const BitVector& code) const {
    if (code.width() != e_bits_) throw WidthError("step code width mismatch");
    auto value = code.to_uint();
    if (value < n_vertices_) return Step::identity(static_cast<std::size_t>(value));
    if (value < n_vertices_ + n_edges_) return Step::edge(static_cast<std::size_t>(value - n_vertices_));
    return std::nullopt;
  }

  // Widths derived from the graph itself: ceil(log2(|V|+1)), ceil(log2(|E|+|V|)), both >= 1.
  static Enumeration of(const Graph& g) {
    return Enumeration(g.vertex_count(), g.edge_count(), bits_for(g.vertex_count() + 1),
                       bits_for(g.vertex_count() + g.edge_count()));
  }

  // Same assignment rule, but with the widths of a graph holding up to
  // `max_vertices` vertices and `max_edges` edges.
  static Enumeration at_capacity(const Graph& g, std::size_t max_edges, std::size_t max_vertices) {
    if (g.vertex_count() > max_vertices || g.edge_count() > max_edges) {
      throw CapacityError("graph with " + std::to_string(g.vertex_count()) + " vertices and " +
                          std::to_string(g.edge_count()) + " edges exceeds capacity (m=" +
                          std::to_string(max_edges) + ", n=" + std::to_string(max_vertices) + ")");
    }
    return Enumeration(g.vertex_count(), g.edge_count(), capacity_vertex_bits(max_vertices),
                       capacity_edge_bits(max_edges, max_vertices));
  }

  static std::size_t capacity_vertex_bits(std::size_t max_vertices) { return bits_for(max_vertices + 1); }
  static std::size_t capacity_edge_bits(std::size_t max_edges, std::size_t max_vertices) {
    return bits_for(max_edges + max_vertices);
  }

  friend bool operator==(const Enumeration&, const Enumeration&) = default;

 private:
  Enumeration(std::size_t nv, std::size_t ne, std::size_t v_bits, std::size_t e_bits)
      : n_vertices_(nv), n_edges_(ne), v_bits_(v_bits), e_bits_(e_bits) {}

  void check_vertex(std::size_t v) const {
    if (v >= n_vertices_) throw LookupError("vertex index " + std::to_string(v) + " out of range");
  }

  std::size_t n_vertices_ = 0;
  std::size_t n_edges_ = 0;
  std::size_t v_bits_ = 1;
  std::size_t e_bits_ = 1;
};

inline Enumeration enumerate(const Graph& g) { return Enumeration::of(g); }

namespace detail {
inline TruthTable endpoint_table(const Enumeration& en, const Graph& g, bool source) {
  if (g.vertex_count() != en.vertex_count() || g.edge_count() != en.edge_count()) {
    throw WidthError("enumeration was not derived from this graph");
  }
  TruthTable t(en.e_bits(), en.v_bits());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) t.set(v, v + 1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edge(e);
    t.set(g.vertex_count() + e, (source ? edge.src : edge.tgt) + 1);
  }
  return t;
}
}  // namespace detail

// Step code -> code of its source vertex; unassigned codes -> all-zero.
inline TruthTable source_table(const Enumeration& en, const Graph& g) {
  return detail::endpoint_table(en, g, true);
}

// Step code -> code of its target vertex; unassigned codes -> all-zero.
inline TruthTable target_table(const Enumeration& en, const Graph& g) {
  return detail::endpoint_table(en, g, false);
}

// Vertex code -> 1 iff the code names a vertex.
inline TruthTable vertex_table(const Enumeration& en) {
  TruthTable t(en.v_bits(), 1);
  for (std::size_t v = 0; v < en.vertex_count(); ++v) t.set(v + 1, 1);
  return t;
}

struct OracleVerdict {
  bool valid = false;
  BitVector end_code;
};

// Reference path checker: walks the codes directly against the graph. Accepts
// iff the start is an assigned vertex code, every step is an assigned code,
// and each step leaves from the current vertex.
inline OracleVerdict path_oracle(const Graph& g, const Enumeration& en, const BitVector& start_code,
                                 std::span<const BitVector> step_codes) {
  OracleVerdict rejected{false, en.zero_vertex()};
  auto current = en.decode_vertex(start_code);
  if (!current) return rejected;
  for (const auto& code : step_codes) {
    auto step = en.decode_step(code);
    if (!step || step_source(g, *step) != *current) return rejected;
    current = step_target(g, *step);
  }
  return {true, en.vertex_code(*current)};
}

struct EncodedPath {
  BitVector start;
  std::vector<BitVector> steps;
};

inline EncodedPath encode_path(const Enumeration& en, const Path& p) {
  EncodedPath out{en.vertex_code(p.start), {}};
  out.steps.reserve(p.steps.size());
  for (const auto& s : p.steps) out.steps.push_back(en.step_code(s));
  return out;
}

}  // namespace pathcirc
