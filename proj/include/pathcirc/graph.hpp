#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pathcirc/budget.hpp"
#include "pathcirc/errors.hpp"

namespace pathcirc {

// State graph of a finite-state machine. Parallel edges and self-loops are
// allowed; declaration order is significant because it fixes the code
// assignment.
class Graph {
 public:
  struct Edge {
    std::string name;
    std::size_t src = 0;
    std::size_t tgt = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Graph() = default;

  Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::set<std::string_view> seen;
    for (const auto& v : vertices_) {
      if (!seen.insert(v).second) throw ParseError("duplicate vertex name '" + v + "'");
    }
    seen.clear();
    for (const auto& e : edges_) {
      if (!seen.insert(e.name).second) throw ParseError("duplicate edge name '" + e.name + "'");
      if (e.src >= vertices_.size() || e.tgt >= vertices_.size()) {
        throw ParseError("edge '" + e.name + "' has an endpoint out of range");
      }
    }
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> find_vertex(std::string_view name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> find_edge(std::string_view name) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].name == name) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

// One step of a run: either a real edge or the identity on a vertex.
struct Step {
  enum class Kind : std::uint8_t { Identity, Edge };
  Kind kind = Kind::Edge;
  std::size_t index = 0;  // vertex index for identities, edge index otherwise

  static Step identity(std::size_t vertex) { return {Kind::Identity, vertex}; }
  static Step edge(std::size_t e) { return {Kind::Edge, e}; }
  bool is_identity() const noexcept { return kind == Kind::Identity; }

  friend bool operator==(const Step&, const Step&) = default;
};

// A claimed run. Whether it is actually a walk in the graph is what the
// oracle and the verifier circuits decide.
struct Path {
  std::size_t start = 0;
  std::vector<Step> steps;

  friend bool operator==(const Path&, const Path&) = default;
};

// Structure-preserving map between graphs.
struct GraphHom {
  std::vector<std::size_t> vmap;
  std::vector<std::size_t> emap;

  bool is_valid(const Graph& dom, const Graph& cod) const {
    if (vmap.size() != dom.vertex_count() || emap.size() != dom.edge_count()) return false;
    for (auto v : vmap) {
      if (v >= cod.vertex_count()) return false;
    }
    for (std::size_t e = 0; e < emap.size(); ++e) {
      if (emap[e] >= cod.edge_count()) return false;
      const auto& de = dom.edge(e);
      const auto& ce = cod.edge(emap[e]);
      if (vmap[de.src] != ce.src || vmap[de.tgt] != ce.tgt) return false;
    }
    return true;
  }
};

inline Step map_step(const GraphHom& h, const Step& s) {
  return s.is_identity() ? Step::identity(h.vmap.at(s.index)) : Step::edge(h.emap.at(s.index));
}

inline Path map_path(const GraphHom& h, const Path& p) {
  Path out{h.vmap.at(p.start), {}};
  out.steps.reserve(p.steps.size());
  for (const auto& s : p.steps) out.steps.push_back(map_step(h, s));
  return out;
}

// Image of the path in the counting category: edges count 1, identities 0.
inline std::size_t path_length(const Path& p) noexcept {
  std::size_t n = 0;
  for (const auto& s : p.steps) n += s.is_identity() ? 0 : 1;
  return n;
}

inline std::size_t step_source(const Graph& g, const Step& s) {
  return s.is_identity() ? s.index : g.edge(s.index).src;
}

inline std::size_t step_target(const Graph& g, const Step& s) {
  return s.is_identity() ? s.index : g.edge(s.index).tgt;
}

// Vertex the path ends at if every step is taken as written.
inline std::size_t end_vertex(const Graph& g, const Path& p) {
  return p.steps.empty() ? p.start : step_target(g, p.steps.back());
}

inline Graph parse_graph_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("graph document must be an object", "$");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("missing array", "$.vertices");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("missing array", "$.edges");
  }
  std::vector<std::string> vertices;
  const auto& jv = doc["vertices"];
  for (std::size_t i = 0; i < jv.size(); ++i) {
    auto loc = "$.vertices[" + std::to_string(i) + "]";
    if (!jv[i].is_string()) throw ParseError("vertex name must be a string", loc);
    auto name = jv[i].get<std::string>();
    for (const auto& prev : vertices) {
      if (prev == name) throw ParseError("duplicate vertex name '" + name + "'", loc);
    }
    vertices.push_back(std::move(name));
  }
  auto vertex_index = [&](const nlohmann::json& j, const std::string& loc) {
    if (!j.is_string()) throw ParseError("endpoint must be a vertex name", loc);
    auto name = j.get<std::string>();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == name) return i;
    }
    throw ParseError("unknown vertex '" + name + "'", loc);
  };
  std::vector<Graph::Edge> edges;
  const auto& je = doc["edges"];
  for (std::size_t i = 0; i < je.size(); ++i) {
    auto loc = "$.edges[" + std::to_string(i) + "]";
    const auto& e = je[i];
    if (!e.is_array() || e.size() != 3) throw ParseError("edge must be [name, src, tgt]", loc);
    if (!e[0].is_string()) throw ParseError("edge name must be a string", loc + "[0]");
    auto name = e[0].get<std::string>();
    for (const auto& prev : edges) {
      if (prev.name == name) throw ParseError("duplicate edge name '" + name + "'", loc + "[0]");
    }
    auto src = vertex_index(e[1], loc + "[1]");
    auto tgt = vertex_index(e[2], loc + "[2]");
    edges.push_back({std::move(name), src, tgt});
  }
  return Graph(std::move(vertices), std::move(edges));
}

// Parses {"vertices": [...], "edges": [[name, src, tgt], ...]}.
inline Graph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  return parse_graph_json(doc);
}

inline nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({e.name, g.vertices()[e.src], g.vertices()[e.tgt]});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

inline std::uint64_t count_graphs(std::size_t n_vertices, std::size_t n_edges) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < 2 * n_edges; ++i) {
    if (n_vertices != 0 && count > (~std::uint64_t{0}) / n_vertices) return ~std::uint64_t{0};
    count *= n_vertices;
  }
  return count;
}

// Every graph on exactly n vertices and m edges, each edge an arbitrary
// (src, tgt) pair. Vertices are named v1..vn and edges e1..em. Graph number t
// reads t in base n; digits from most significant are src(e1), tgt(e1),
// src(e2), ...
inline std::vector<Graph> all_graphs(std::size_t n, std::size_t m, const Budget& budget = {}) {
  const auto total = count_graphs(n, m);
  if (total > budget.max_enumerated_graphs) {
    throw BudgetError("all_graphs(" + std::to_string(n) + ", " + std::to_string(m) + ") has " +
                      std::to_string(total) + " graphs, budget is " +
                      std::to_string(budget.max_enumerated_graphs));
  }
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = "v" + std::to_string(i + 1);
  std::vector<Graph> out;
  out.reserve(total);
  std::vector<std::size_t> digits(2 * m, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (std::size_t d = digits.size(); d > 0; --d) {
      digits[d - 1] = static_cast<std::size_t>(rest % n);
      rest /= n;
    }
    std::vector<Graph::Edge> edges(m);
    for (std::size_t j = 0; j < m; ++j) {
      edges[j] = {"e" + std::to_string(j + 1), digits[2 * j], digits[2 * j + 1]};
    }
    out.emplace_back(names, std::move(edges));
  }
  return out;
}

}  // namespace pathcirc
