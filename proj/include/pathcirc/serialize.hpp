#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pathcirc/circuit.hpp"
#include "pathcirc/errors.hpp"

namespace pathcirc {

inline constexpr std::string_view kFormatVersion = "1";

// A circuit plus free-form metadata (wire partition, enumeration, capacities).
struct CircuitDocument {
  Circuit circuit;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

inline nlohmann::ordered_json document_to_json_value(const CircuitDocument& doc) {
  const auto& c = doc.circuit;
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["n_inputs"] = c.n_inputs();
  j["n_outputs"] = c.n_outputs();
  auto gates = nlohmann::ordered_json::array();
  for (const auto& g : c.gates()) {
    nlohmann::ordered_json jg;
    jg["op"] = gate_name(g.kind);
    jg["in"] = std::vector<WireId>(g.inputs().begin(), g.inputs().end());
    jg["out"] = std::vector<WireId>(g.outputs().begin(), g.outputs().end());
    gates.push_back(std::move(jg));
  }
  j["gates"] = std::move(gates);
  j["output_map"] = c.output_map();
  j["metadata"] = doc.metadata.is_null() ? nlohmann::ordered_json::object() : doc.metadata;
  return j;
}

// Compact, key order fixed: format_version, n_inputs, n_outputs, gates,
// output_map, metadata. Ends with a newline.
inline std::string to_json(const CircuitDocument& doc) { return document_to_json_value(doc).dump() + "\n"; }

inline std::string to_json(const Circuit& c) { return to_json(CircuitDocument{c, {}}); }

inline CircuitDocument document_from_json(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!j.is_object()) throw ParseError("circuit document must be an object", "$");

  auto field = [&](const char* name) -> const nlohmann::ordered_json& {
    if (!j.contains(name)) throw ParseError("missing field", std::string("$.") + name);
    return j[name];
  };
  auto wire_count = [](const nlohmann::ordered_json& v, const std::string& loc) -> std::uint64_t {
    if (!v.is_number_unsigned()) throw ParseError("expected a non-negative integer", loc);
    auto n = v.get<std::uint64_t>();
    if (n > 0xFFFFFFFFULL) throw ParseError("wire number too large", loc);
    return n;
  };
  auto wire_list = [&](const nlohmann::ordered_json& v, const std::string& loc) {
    if (!v.is_array()) throw ParseError("expected an array of wire ids", loc);
    std::vector<WireId> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(static_cast<WireId>(wire_count(v[i], loc + "[" + std::to_string(i) + "]")));
    }
    return out;
  };

  const auto& version = field("format_version");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
    throw ParseError("unsupported format_version", "$.format_version");
  }
  const auto n_inputs = wire_count(field("n_inputs"), "$.n_inputs");
  const auto n_outputs = wire_count(field("n_outputs"), "$.n_outputs");
  const auto& jg = field("gates");
  if (!jg.is_array()) throw ParseError("expected an array", "$.gates");

  std::vector<Gate> gates;
  gates.reserve(jg.size());
  for (std::size_t i = 0; i < jg.size(); ++i) {
    const auto loc = "$.gates[" + std::to_string(i) + "]";
    const auto& g = jg[i];
    if (!g.is_object() || !g.contains("op") || !g["op"].is_string()) {
      throw ParseError("gate needs a string 'op'", loc);
    }
    Gate gate;
    try {
      gate.kind = gate_from_name(g["op"].get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(e.what(), loc + ".op");
    }
    auto in = wire_list(g.contains("in") ? g["in"] : nlohmann::ordered_json::array(), loc + ".in");
    auto out = wire_list(g.contains("out") ? g["out"] : nlohmann::ordered_json::array(), loc + ".out");
    if (in.size() != input_arity(gate.kind) || out.size() != output_arity(gate.kind)) {
      throw ValidationError(loc + ": " + std::string(gate_name(gate.kind)) + " takes " +
                            std::to_string(input_arity(gate.kind)) + " inputs and " +
                            std::to_string(output_arity(gate.kind)) + " outputs");
    }
    for (std::size_t k = 0; k < in.size(); ++k) gate.in[k] = in[k];
    for (std::size_t k = 0; k < out.size(); ++k) gate.out[k] = out[k];
    gates.push_back(gate);
  }
  auto outputs = wire_list(field("output_map"), "$.output_map");
  if (outputs.size() != n_outputs) {
    throw ValidationError("n_outputs is " + std::to_string(n_outputs) + " but output_map has " +
                          std::to_string(outputs.size()) + " entries");
  }
  CircuitDocument doc{Circuit(static_cast<std::size_t>(n_inputs), std::move(gates), std::move(outputs)), {}};
  if (j.contains("metadata") && !j["metadata"].is_null()) {
    if (!j["metadata"].is_object()) throw ParseError("metadata must be an object", "$.metadata");
    doc.metadata = j["metadata"];
  }
  return doc;
}

inline Circuit from_json(std::string_view text) { return document_from_json(text).circuit; }

}  // namespace pathcirc
