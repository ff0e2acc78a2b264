#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pathcirc/circuit.hpp"
#include "pathcirc/errors.hpp"

namespace pathcirc {

// How input and output wires are grouped into Bristol "values". Empty means
// a single value covering all wires (or no value when there are no wires).
struct BristolLayout {
  std::vector<std::size_t> input_values;
  std::vector<std::size_t> output_values;
};

// Lowers a circuit to Bristol Fashion text.
//
// Wire numbering: inputs keep ids 0..n_in-1, every gate output keeps its id,
// the intermediate wires of lowered NANDs come next, and the output block is
// last, as the format requires. A gate whose output is a circuit output writes
// straight into the output block; outputs fed directly by an input wire get an
// EQW. Lowering: NAND -> AND + INV, COPY -> two EQW, TRUE/FALSE -> EQ with
// literal 1/0.
inline std::string to_bristol(const Circuit& c, const BristolLayout& layout = {}) {
  auto groups = [](const std::vector<std::size_t>& given, std::size_t total, const char* what) {
    if (given.empty()) return total == 0 ? std::vector<std::size_t>{} : std::vector<std::size_t>{total};
    if (std::accumulate(given.begin(), given.end(), std::size_t{0}) != total) {
      throw WidthError(std::string("Bristol ") + what + " value widths do not sum to " + std::to_string(total));
    }
    return given;
  };
  const auto in_groups = groups(layout.input_values, c.n_inputs(), "input");
  const auto out_groups = groups(layout.output_values, c.n_outputs(), "output");

  const std::size_t internal = c.wire_count();
  const std::size_t temps = c.count(GateKind::Nand);
  const std::size_t out_base = internal + temps;
  const std::size_t n_wires = out_base + c.n_outputs();

  // Where each internal wire is physically written.
  std::vector<std::size_t> target(internal);
  std::iota(target.begin(), target.end(), std::size_t{0});
  std::vector<std::size_t> passthrough;  // output index fed by an input wire
  for (std::size_t i = 0; i < c.n_outputs(); ++i) {
    auto w = c.output_map()[i];
    if (w < c.n_inputs()) {
      passthrough.push_back(i);
    } else {
      target[w] = out_base + i;
    }
  }

  std::ostringstream body;
  std::size_t n_gates = 0;
  std::size_t next_temp = internal;
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Nand: {
        auto tmp = next_temp++;
        body << "2 1 " << target[g.in[0]] << ' ' << target[g.in[1]] << ' ' << tmp << " AND\n";
        body << "1 1 " << tmp << ' ' << target[g.out[0]] << " INV\n";
        n_gates += 2;
        break;
      }
      case GateKind::Copy:
        body << "1 1 " << target[g.in[0]] << ' ' << target[g.out[0]] << " EQW\n";
        body << "1 1 " << target[g.in[0]] << ' ' << target[g.out[1]] << " EQW\n";
        n_gates += 2;
        break;
      case GateKind::True:
      case GateKind::False:
        body << "1 1 " << (g.kind == GateKind::True ? 1 : 0) << ' ' << target[g.out[0]] << " EQ\n";
        n_gates += 1;
        break;
    }
  }
  for (auto i : passthrough) {
    body << "1 1 " << c.output_map()[i] << ' ' << out_base + i << " EQW\n";
    n_gates += 1;
  }

  std::ostringstream out;
  out << n_gates << ' ' << n_wires << '\n';
  out << in_groups.size();
  for (auto w : in_groups) out << ' ' << w;
  out << '\n' << out_groups.size();
  for (auto w : out_groups) out << ' ' << w;
  out << "\n\n" << body.str();
  return out.str();
}

}  // namespace pathcirc
