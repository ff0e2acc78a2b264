#pragma once

// Command-line front end. Kept in a header so the tests can drive it in
// process with string streams.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathcirc/pathcirc.hpp"

namespace pathcirc::cli {

using nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain error, rejected path, circuits differ
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDisagree = 3;  // oracle and circuit verdicts differ

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IoError", what) {}
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write '" + path + "'");
}

// FNV-1a over the canonical graph JSON.
inline std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : graph_to_json(g).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

inline ordered_json enumeration_json(const Graph& g, const Enumeration& en) {
  ordered_json vertices = ordered_json::object();
  ordered_json steps = ordered_json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    vertices[g.vertices()[v]] = en.vertex_code(v).to_string();
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    steps["Id(" + g.vertices()[v] + ")"] = en.identity_code(v).to_string();
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) steps[g.edge(e).name] = en.edge_code(e).to_string();
  return {{"v_bits", en.v_bits()}, {"e_bits", en.e_bits()}, {"vertices", vertices}, {"steps", steps}};
}

// "e1,Id(b),e2" -> steps. An empty string is the empty path.
inline std::vector<Step> parse_steps(const Graph& g, const std::string& text) {
  std::vector<Step> steps;
  if (text.empty()) return steps;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    if (token.size() > 4 && token.rfind("Id(", 0) == 0 && token.back() == ')') {
      auto name = token.substr(3, token.size() - 4);
      auto v = g.find_vertex(name);
      if (!v) throw LookupError("unknown vertex '" + name + "' in '" + token + "'");
      steps.push_back(Step::identity(*v));
    } else {
      auto e = g.find_edge(token);
      if (!e) throw LookupError("unknown edge '" + token + "'");
      steps.push_back(Step::edge(*e));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return steps;
}

inline std::size_t meta_width(const ordered_json& meta, const char* key) {
  if (!meta.contains(key) || !meta[key].is_number_unsigned()) {
    throw ValidationError(std::string("circuit metadata lacks '") + key + "'");
  }
  return meta[key].get<std::size_t>();
}

// Bristol value grouping taken from the wire partition in the metadata.
inline BristolLayout layout_from(const ordered_json& meta) {
  BristolLayout layout;
  if (!meta.is_object() || !meta.contains("kind")) return layout;
  auto add = [](std::vector<std::size_t>& to, std::size_t w) {
    if (w > 0) to.push_back(w);
  };
  const auto kind = meta["kind"].get<std::string>();
  add(layout.input_values, meta_width(meta, "in_width"));
  add(layout.input_values, meta_width(meta, "spec_width"));
  add(layout.input_values, meta_width(meta, "witness_width"));
  if (kind == "snark") {
    add(layout.input_values, meta_width(meta, "claim_width"));
    layout.output_values = {1};
  } else {
    layout.output_values = {1};
    add(layout.output_values, meta_width(meta, "out_width"));
  }
  return layout;
}

inline std::string render(const CircuitDocument& doc, const std::string& format) {
  if (format == "bristol") return to_bristol(doc.circuit, layout_from(doc.metadata));
  return to_json(doc);
}

inline ordered_json partition(const char* kind, std::size_t in, std::size_t spec, std::size_t witness,
                              std::size_t out) {
  return {{"kind", kind}, {"in_width", in}, {"spec_width", spec}, {"witness_width", witness}, {"out_width", out}};
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile FSM graphs into path-verifying boolean circuits", "pathcirc"};
  app.require_subcommand(1);

  std::string graph_file;
  std::string circuit_file;
  std::string out_file;
  std::string format = "json";
  std::string kind;
  std::string input;
  std::string start;
  std::string path_text;
  std::string end;
  std::string a_file;
  std::string b_file;
  std::size_t length = 0;
  std::optional<std::size_t> pad_length;
  std::size_t max_vertices = 0;
  std::size_t max_edges = 0;
  std::size_t max_width = 20;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "bristol"}));
    sub->add_option("--out", out_file, "Output file (default stdout)");
  };

  auto* compile = app.add_subcommand("compile", "Compile the k-step path verifier of a graph");
  compile->add_option("--graph", graph_file, "Graph JSON file")->required();
  compile->add_option("--length", length, "Number of steps k")->required();
  add_format(compile);

  auto* compile_universal =
      app.add_subcommand("compile-universal", "Compile the graph-agnostic k-step verifier for a capacity");
  compile_universal->add_option("--max-vertices", max_vertices, "Vertex capacity n")->required();
  compile_universal->add_option("--max-edges", max_edges, "Edge capacity m")->required();
  compile_universal->add_option("--length", length, "Number of steps k")->required();
  add_format(compile_universal);

  auto* snark = app.add_subcommand("snarkize", "Turn a compiled verifier into a single-output checker");
  snark->add_option("--circuit", circuit_file, "Compiled verifier (JSON)")->required();
  snark->add_option("--kind", kind, "Verifier kind")->required()->check(CLI::IsMember({"kp", "zkp"}));
  add_format(snark);

  auto* eval = app.add_subcommand("eval", "Evaluate a circuit on one input");
  eval->add_option("--circuit", circuit_file, "Circuit (JSON)")->required();
  eval->add_option("--input", input, "Input bits, first wire first")->required();

  auto* verify = app.add_subcommand("verify-path", "Check a path with the oracle and the compiled circuit");
  verify->add_option("--graph", graph_file, "Graph JSON file")->required();
  verify->add_option("--start", start, "Start vertex name")->required();
  verify->add_option("--path", path_text, "Comma-separated edge names, Id(v) for identities")->required();
  verify->add_option("--end", end, "Claimed end vertex");
  verify->add_option("--length", pad_length, "Verifier length k; shorter paths are padded with identities");

  auto* encode = app.add_subcommand("encode-graph", "Print the graph encoding at a capacity");
  encode->add_option("--graph", graph_file, "Graph JSON file")->required();
  encode->add_option("--max-vertices", max_vertices, "Vertex capacity n")->required();
  encode->add_option("--max-edges", max_edges, "Edge capacity m")->required();

  auto* equiv = app.add_subcommand("equiv", "Decide extensional equality of two circuits");
  equiv->add_option("--a", a_file, "First circuit (JSON)")->required();
  equiv->add_option("--b", b_file, "Second circuit (JSON)")->required();
  equiv->add_option("--max-width", max_width, "Refuse inputs wider than this");

  std::vector<const char*> argv{"pathcirc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    const auto budget = Budget::from_env();

    if (*compile) {
      auto g = parse_graph(read_file(graph_file));
      auto en = enumerate(g);
      auto f = path_verifier(g, en, length, budget);
      CircuitDocument doc{f.circuit(), partition("kp", f.in_width(), 0, f.witness_width(), f.out_width())};
      doc.metadata["k"] = length;
      doc.metadata["graph_hash"] = graph_hash(g);
      doc.metadata["graph"] = graph_to_json(g);
      doc.metadata["enumeration"] = enumeration_json(g, en);
      write_output(render(doc, format), out_file, out);
      return kExitOk;
    }

    if (*compile_universal) {
      auto fam = CapacityFamily::build(max_edges, max_vertices, budget);
      auto f = universal_verifier(fam, length, budget);
      CircuitDocument doc{f.circuit(),
                          partition("zkp", f.in_width(), f.spec_width(), f.witness_width(), f.out_width())};
      doc.metadata["k"] = length;
      doc.metadata["capacity"] = {{"max_edges", max_edges}, {"max_vertices", max_vertices}};
      doc.metadata["v_bits"] = fam.v_bits;
      doc.metadata["e_bits"] = fam.e_bits;
      doc.metadata["graph_count"] = fam.size();
      write_output(render(doc, format), out_file, out);
      return kExitOk;
    }

    if (*snark) {
      auto src = document_from_json(read_file(circuit_file));
      const auto& meta = src.metadata;
      if (!meta.contains("kind") || meta["kind"] != kind) {
        throw ValidationError("circuit is not a '" + kind + "' verifier");
      }
      const auto in = meta_width(meta, "in_width");
      const auto spec = meta_width(meta, "spec_width");
      const auto witness = meta_width(meta, "witness_width");
      const auto outw = meta_width(meta, "out_width");
      Circuit c = kind == "kp" ? snarkize(KpMorphism(in + spec, witness, outw, src.circuit))
                               : zkp_snarkize(ZkpMorphism(in, spec, witness, outw, src.circuit));
      CircuitDocument doc{std::move(c), meta};
      doc.metadata["kind"] = "snark";
      doc.metadata["wraps"] = kind;
      doc.metadata["claim_width"] = outw;
      doc.metadata.erase("out_width");
      write_output(render(doc, format), out_file, out);
      return kExitOk;
    }

    if (*eval) {
      auto c = from_json(read_file(circuit_file));
      auto x = BitVector::from_string(input);
      if (x.width() != c.n_inputs()) {
        throw WidthError("circuit takes " + std::to_string(c.n_inputs()) + " input bits, got " +
                         std::to_string(x.width()));
      }
      out << c.eval(x).to_string() << '\n';
      return kExitOk;
    }

    if (*verify) {
      auto g = parse_graph(read_file(graph_file));
      auto en = enumerate(g);
      auto s = g.find_vertex(start);
      if (!s) throw LookupError("unknown vertex '" + start + "'");
      Path p{*s, parse_steps(g, path_text)};
      const std::size_t k = pad_length.value_or(p.steps.size());
      auto codes = pad_path(g, en, p, k);

      BitVector claim = en.vertex_code(end_vertex(g, p));
      if (!end.empty()) {
        auto e = g.find_vertex(end);
        if (!e) throw LookupError("unknown vertex '" + end + "'");
        claim = en.vertex_code(*e);
      }

      auto verdict = path_oracle(g, en, en.vertex_code(p.start), codes);
      const bool oracle_ok = verdict.valid && verdict.end_code == claim;

      auto checker = snarkize(path_verifier(g, en, k, budget));
      BitVector x = en.vertex_code(p.start);
      for (const auto& c : codes) x.append(c);
      x.append(claim);
      const bool circuit_ok = checker.eval(x)[0];

      auto word = [](bool ok) { return ok ? "valid" : "invalid"; };
      out << "oracle: " << word(oracle_ok) << '\n';
      out << "circuit: " << word(circuit_ok) << '\n';
      if (oracle_ok != circuit_ok) {
        err << "error: oracle and circuit disagree\n";
        return kExitDisagree;
      }
      return oracle_ok ? kExitOk : kExitFailure;
    }

    if (*encode) {
      auto g = parse_graph(read_file(graph_file));
      out << encode_graph(g, max_edges, max_vertices).to_text() << '\n';
      return kExitOk;
    }

    if (*equiv) {
      auto a = from_json(read_file(a_file));
      auto b = from_json(read_file(b_file));
      const bool same = ext_equal(a, b, max_width);
      out << (same ? "equal" : "not equal") << '\n';
      return same ? kExitOk : kExitFailure;
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace pathcirc::cli
