#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pathcirc/algebra.hpp"
#include "pathcirc/bit_vector.hpp"
#include "pathcirc/budget.hpp"
#include "pathcirc/builder.hpp"
#include "pathcirc/circuit.hpp"
#include "pathcirc/enumeration.hpp"
#include "pathcirc/errors.hpp"
#include "pathcirc/graph.hpp"
#include "pathcirc/synth.hpp"
#include "pathcirc/truth_table.hpp"

namespace pathcirc {

// Width of the graph-spec bus for capacity (m edges, n vertices): the source
// and target tables at capacity widths, 2^E rows of V bits each.
inline std::size_t encoding_width(std::size_t max_edges, std::size_t max_vertices) {
  const auto v = Enumeration::capacity_vertex_bits(max_vertices);
  const auto e = Enumeration::capacity_edge_bits(max_edges, max_vertices);
  if (e >= 40) throw BudgetError("capacity too large to encode");
  return 2 * (std::size_t{1} << e) * v;
}

// A graph serialized as its truth tables: source rows in code order, then
// target rows, each row most-significant bit first.
struct GraphEncoding {
  std::size_t max_edges = 0;
  std::size_t max_vertices = 0;
  BitVector bits;

  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (std::size_t i = 0; i < bits.width(); i += 4) {
      unsigned nibble = 0;
      for (std::size_t j = 0; j < 4; ++j) {
        nibble = (nibble << 1) | (i + j < bits.width() && bits[i + j] ? 1U : 0U);
      }
      out.push_back(kDigits[nibble]);
    }
    return out;
  }

  // "(m,n) hex", the form the command line prints.
  std::string to_text() const {
    return "(" + std::to_string(max_edges) + "," + std::to_string(max_vertices) + ") " + to_hex();
  }

  static GraphEncoding from_text(std::string_view text) {
    auto fail = [&](const std::string& why) -> GraphEncoding {
      throw ParseError(why, "graph encoding");
    };
    std::size_t pos = 0;
    auto skip_spaces = [&] {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto number = [&]() -> std::size_t {
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail("expected a number");
      std::size_t v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') v = v * 10 + (text[pos++] - '0');
      return v;
    };
    skip_spaces();
    if (pos >= text.size() || text[pos++] != '(') return fail("expected '('");
    GraphEncoding enc;
    enc.max_edges = number();
    if (pos >= text.size() || text[pos++] != ',') return fail("expected ','");
    enc.max_vertices = number();
    if (pos >= text.size() || text[pos++] != ')') return fail("expected ')'");
    skip_spaces();
    const auto width = encoding_width(enc.max_edges, enc.max_vertices);
    std::string_view hex = text.substr(pos);
    while (!hex.empty() && (hex.back() == '\n' || hex.back() == '\r' || hex.back() == ' ')) {
      hex.remove_suffix(1);
    }
    if (hex.size() * 4 != width) {
      return fail("expected " + std::to_string(width / 4) + " hex digits, got " + std::to_string(hex.size()));
    }
    for (char c : hex) {
      unsigned nibble = 0;
      if (c >= '0' && c <= '9') nibble = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f') nibble = static_cast<unsigned>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') nibble = static_cast<unsigned>(c - 'A' + 10);
      else return fail(std::string("invalid hex digit '") + c + "'");
      for (int j = 3; j >= 0; --j) enc.bits.push_back(((nibble >> j) & 1U) != 0);
    }
    return enc;
  }

  friend bool operator==(const GraphEncoding&, const GraphEncoding&) = default;
};

inline GraphEncoding encode_graph(const Graph& g, std::size_t max_edges, std::size_t max_vertices) {
  const auto en = Enumeration::at_capacity(g, max_edges, max_vertices);
  GraphEncoding enc{max_edges, max_vertices, {}};
  for (const auto& table : {source_table(en, g), target_table(en, g)}) {
    for (std::uint64_t r = 0; r < table.row_count(); ++r) enc.bits.append(table.row(r));
  }
  return enc;
}

// Number of graphs with 1..n vertices and 0..m edges.
inline std::uint64_t count_capacity_graphs(std::size_t max_edges, std::size_t max_vertices) {
  std::uint64_t total = 0;
  for (std::size_t v = 1; v <= max_vertices; ++v) {
    for (std::size_t e = 0; e <= max_edges; ++e) {
      auto c = count_graphs(v, e);
      if (c == ~std::uint64_t{0} || total + c < total) return ~std::uint64_t{0};
      total += c;
    }
  }
  return total;
}

// The graphs a universal circuit of capacity (m, n) answers for, in canonical
// order (vertex count, then edge count, then all_graphs order), one per
// distinct encoding. The vertex-less graph is left out: its tables are all
// zero, so its term would contribute nothing to the OR.
struct CapacityFamily {
  std::size_t max_edges = 0;
  std::size_t max_vertices = 0;
  std::size_t v_bits = 1;
  std::size_t e_bits = 1;
  std::vector<Graph> graphs;
  std::vector<GraphEncoding> encodings;

  static CapacityFamily build(std::size_t max_edges, std::size_t max_vertices, const Budget& budget = {}) {
    const auto total = count_capacity_graphs(max_edges, max_vertices);
    if (total > budget.max_universal_graphs) {
      throw BudgetError("capacity (m=" + std::to_string(max_edges) + ", n=" +
                        std::to_string(max_vertices) + ") has " +
                        (total == ~std::uint64_t{0} ? std::string("too many") : std::to_string(total)) +
                        " graphs, budget is " + std::to_string(budget.max_universal_graphs));
    }
    CapacityFamily fam;
    fam.max_edges = max_edges;
    fam.max_vertices = max_vertices;
    fam.v_bits = Enumeration::capacity_vertex_bits(max_vertices);
    fam.e_bits = Enumeration::capacity_edge_bits(max_edges, max_vertices);
    if (fam.e_bits > budget.max_synth_width) {
      throw BudgetError("capacity edge width " + std::to_string(fam.e_bits) + " exceeds synth budget");
    }
    Budget enum_budget = budget;
    enum_budget.max_enumerated_graphs = budget.max_universal_graphs;
    std::set<BitVector> seen;
    for (std::size_t v = 1; v <= max_vertices; ++v) {
      for (std::size_t e = 0; e <= max_edges; ++e) {
        for (auto& g : all_graphs(v, e, enum_budget)) {
          auto enc = encode_graph(g, max_edges, max_vertices);
          if (!seen.insert(enc.bits).second) continue;
          fam.graphs.push_back(std::move(g));
          fam.encodings.push_back(std::move(enc));
        }
      }
    }
    return fam;
  }

  std::size_t spec_width() const { return encoding_width(max_edges, max_vertices); }
  std::size_t size() const noexcept { return graphs.size(); }
  Enumeration enumeration(std::size_t i) const {
    return Enumeration::at_capacity(graphs.at(i), max_edges, max_vertices);
  }
};

// spec -> one output per family graph, output i being the filter F_{enc(G_i)}.
inline Circuit filter_bank(const CapacityFamily& fam) {
  const auto f = fam.spec_width();
  std::vector<Circuit> filters;
  filters.reserve(fam.size());
  for (const auto& enc : fam.encodings) filters.push_back(filter_circuit(enc.bits));
  return seq(copy_bus(f, fam.size()), tensor_all(filters));
}

// spec ++ key -> OR over i of (F_i(spec) AND table_i(key)), bitwise. When spec
// encodes G_i exactly one filter fires and the result is table_i(key); for
// any other spec it is all-zero.
inline Circuit universal_lookup(const CapacityFamily& fam, const std::vector<TruthTable>& tables,
                                std::size_t key_width, std::size_t out_width, const Budget& budget = {}) {
  const auto f = fam.spec_width();
  const auto n = fam.size();
  CircuitBuilder b(f + key_width);
  auto flags = b.embed(filter_bank(fam), b.inputs(0, f));
  std::vector<std::vector<WireId>> key_copies(key_width);
  for (std::size_t i = 0; i < key_width; ++i) key_copies[i] = b.fanout(b.input(f + i), n);

  std::vector<std::vector<WireId>> per_bit(out_width);
  std::vector<WireId> key(key_width);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t i = 0; i < key_width; ++i) key[i] = key_copies[i][g];
    auto value = b.embed(synth(tables.at(g), budget), key);
    auto flag = b.fanout(flags[g], out_width);
    for (std::size_t j = 0; j < out_width; ++j) per_bit[j].push_back(b.and_gate(flag[j], value[j]));
  }
  std::vector<WireId> out(out_width);
  for (std::size_t j = 0; j < out_width; ++j) out[j] = b.or_all(per_bit[j]);
  return std::move(b).finish(std::move(out));
}

namespace detail {
inline Circuit universal_endpoint(const CapacityFamily& fam, bool source, const Budget& budget) {
  std::vector<TruthTable> tables;
  tables.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    auto en = fam.enumeration(i);
    tables.push_back(source ? source_table(en, fam.graphs[i]) : target_table(en, fam.graphs[i]));
  }
  return universal_lookup(fam, tables, fam.e_bits, fam.v_bits, budget);
}
}  // namespace detail

// S_{m,n}: spec ++ step code -> source vertex code in the encoded graph.
inline Circuit universal_source(const CapacityFamily& fam, const Budget& budget = {}) {
  return detail::universal_endpoint(fam, true, budget);
}
inline Circuit universal_source(std::size_t max_edges, std::size_t max_vertices, const Budget& budget = {}) {
  return universal_source(CapacityFamily::build(max_edges, max_vertices, budget), budget);
}

// T_{m,n}: spec ++ step code -> target vertex code in the encoded graph.
inline Circuit universal_target(const CapacityFamily& fam, const Budget& budget = {}) {
  return detail::universal_endpoint(fam, false, budget);
}
inline Circuit universal_target(std::size_t max_edges, std::size_t max_vertices, const Budget& budget = {}) {
  return universal_target(CapacityFamily::build(max_edges, max_vertices, budget), budget);
}

// spec ++ vertex code -> 1 iff the code names a vertex of the encoded graph.
inline Circuit universal_vertex_check(const CapacityFamily& fam, const Budget& budget = {}) {
  std::vector<TruthTable> tables;
  tables.reserve(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) tables.push_back(vertex_table(fam.enumeration(i)));
  return universal_lookup(fam, tables, fam.v_bits, 1, budget);
}

// A zero-knowledge proof circuit A -> B with a shared graph-spec bus:
//   state-in (A) ++ spec (X^k) ++ witness (X^n)  ->  flag ++ state-out (B)
class ZkpMorphism {
 public:
  struct Result {
    bool flag = false;
    BitVector state;
  };

  ZkpMorphism(std::size_t in_width, std::size_t spec_width, std::size_t witness_width,
              std::size_t out_width, Circuit circuit)
      : in_width_(in_width), spec_width_(spec_width), witness_width_(witness_width),
        out_width_(out_width), circuit_(std::move(circuit)) {
    if (circuit_.n_inputs() != in_width_ + spec_width_ + witness_width_ ||
        circuit_.n_outputs() != 1 + out_width_) {
      throw WidthError("circuit of shape " + std::to_string(circuit_.n_inputs()) + "->" +
                       std::to_string(circuit_.n_outputs()) + " does not fit partition (" +
                       std::to_string(in_width_) + "+" + std::to_string(spec_width_) + "+" +
                       std::to_string(witness_width_) + ")->(1+" + std::to_string(out_width_) + ")");
    }
  }

  std::size_t in_width() const noexcept { return in_width_; }
  std::size_t spec_width() const noexcept { return spec_width_; }
  std::size_t witness_width() const noexcept { return witness_width_; }
  std::size_t out_width() const noexcept { return out_width_; }
  const Circuit& circuit() const noexcept { return circuit_; }

  Result eval(const BitVector& state, const BitVector& spec, const BitVector& witness) const {
    auto out = circuit_.eval(concat({state, spec, witness}));
    return {out[0], out.slice(1, out_width_)};
  }

 private:
  std::size_t in_width_;
  std::size_t spec_width_;
  std::size_t witness_width_;
  std::size_t out_width_;
  Circuit circuit_;
};

// TRUE ⊗ Id_A, with the graph-encoding bus read and dropped.
inline ZkpMorphism zkp_identity(std::size_t w, std::size_t spec_width) {
  return ZkpMorphism(w, spec_width, 0, w,
                     tensor({primitive(GateKind::True), identity(w), discard(spec_width)}));
}

// The graph-encoding bus is copied and routed to both sides; witnesses concatenate with
// f's block first; flags are AND-ed.
//   (Id_A ⊗ COPY_k ⊗ Id);(Id ⊗ σ ⊗ Id);(f ⊗ Id);(Id_X ⊗ g);(AND ⊗ Id_C)
inline ZkpMorphism zkp_compose(const ZkpMorphism& f, const ZkpMorphism& g) {
  if (f.out_width() != g.in_width()) {
    throw WidthError("zkp_compose: f outputs " + std::to_string(f.out_width()) +
                     " state bits but g expects " + std::to_string(g.in_width()));
  }
  if (f.spec_width() != g.spec_width()) {
    throw WidthError("zkp_compose: spec widths " + std::to_string(f.spec_width()) + " and " +
                     std::to_string(g.spec_width()) + " differ");
  }
  const auto a = f.in_width();
  const auto k = f.spec_width();
  const auto n0 = f.witness_width();
  const auto n1 = g.witness_width();
  auto c = seq({tensor({identity(a), copy_bus(k), identity(n0 + n1)}),
                tensor({identity(a + k), symmetry(k, n0), identity(n1)}),
                tensor(f.circuit(), identity(k + n1)),
                tensor(identity(1), g.circuit()),
                tensor(derived_gate(DerivedGate::And), identity(g.out_width()))});
  return ZkpMorphism(a, k, n0 + n1, g.out_width(), std::move(c));
}

// One graph-agnostic step: state ++ spec ++ step code -> MATCH(state, S(spec, e)) ++ T(spec, e).
inline ZkpMorphism universal_step(const CapacityFamily& fam, const Budget& budget = {}) {
  const auto v = fam.v_bits;
  const auto e = fam.e_bits;
  const auto f = fam.spec_width();
  auto c = seq({tensor({identity(v), copy_bus(f), copy_bus(e)}),
                tensor({identity(v + f), symmetry(f, e), identity(e)}),
                tensor({identity(v), universal_source(fam, budget), universal_target(fam, budget)}),
                tensor(match_circuit(v), identity(v))});
  return ZkpMorphism(v, f, e, v, std::move(c));
}
inline ZkpMorphism universal_step(std::size_t max_edges, std::size_t max_vertices, const Budget& budget = {}) {
  return universal_step(CapacityFamily::build(max_edges, max_vertices, budget), budget);
}

// Zero-step verifier: accepts iff the state names a vertex of the encoded graph.
inline ZkpMorphism universal_vertex_verifier(const CapacityFamily& fam, const Budget& budget = {}) {
  const auto v = fam.v_bits;
  const auto f = fam.spec_width();
  auto c = seq({tensor(copy_bus(v), identity(f)),
                tensor(identity(v), symmetry(v, f)),
                symmetry(v, f + v),
                tensor(universal_vertex_check(fam, budget), identity(v))});
  return ZkpMorphism(v, f, 0, v, std::move(c));
}

// k-fold left-associated composition of universal_step: checks any walk of at
// most k steps (shorter ones padded with identities) in any graph within capacity.
inline ZkpMorphism universal_verifier(const CapacityFamily& fam, std::size_t k, const Budget& budget = {}) {
  if (k == 0) return universal_vertex_verifier(fam, budget);
  auto step = universal_step(fam, budget);
  const auto per_step = step.circuit().gate_count() + 3 + fam.spec_width();
  if (per_step != 0 && k > budget.max_gates / per_step) {
    throw BudgetError("universal_verifier: " + std::to_string(k) + " steps need about " +
                      std::to_string(k * per_step) + " gates, budget is " +
                      std::to_string(budget.max_gates));
  }
  ZkpMorphism acc = step;
  for (std::size_t i = 1; i < k; ++i) acc = zkp_compose(acc, step);
  return acc;
}
inline ZkpMorphism universal_verifier(std::size_t max_edges, std::size_t max_vertices, std::size_t k,
                                      const Budget& budget = {}) {
  return universal_verifier(CapacityFamily::build(max_edges, max_vertices, budget), k, budget);
}

// Inputs state ++ spec ++ witness ++ claim; 1 iff f accepts and its state
// output equals the non-zero claim.
inline Circuit zkp_snarkize(const ZkpMorphism& f) {
  if (f.out_width() == 0) throw WidthError("zkp_snarkize needs a non-empty output bus");
  return seq({tensor(f.circuit(), identity(f.out_width())),
              tensor(identity(1), match_circuit(f.out_width())),
              derived_gate(DerivedGate::And)});
}

}  // namespace pathcirc
