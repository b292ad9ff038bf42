#include "gmc/json_io.hpp"

#include <cstdint>
#include <limits>
#include <set>

#include <json.hpp>

#include "gmc/errors.hpp"

namespace gmc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void require_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ParseError(where + ": unknown key '" + key + "'");
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) throw ParseError(where + ": missing key '" + key + "'");
  }
}

std::int64_t integer(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw ParseError(where + ": integer out of range");
    return static_cast<std::int64_t>(u);
  }
  if (v.is_number_integer()) return v.get<std::int64_t>();
  throw ParseError(where + ": expected an integer literal");
}

std::string identifier(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  auto s = v.get<std::string>();
  if (s.empty()) throw ParseError(where + ": must be non-empty");
  return s;
}

std::pair<std::int64_t, std::int64_t> int_pair(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ParseError(where + ": expected a pair of integers");
  return {integer(v[0], where), integer(v[1], where)};
}

Vertex parse_vertex(const json& v, std::size_t index) {
  const std::string where = "vertices[" + std::to_string(index) + "]";
  require_keys(v, {"id", "g", "fibres", "b"}, where);
  Vertex out;
  out.id = identifier(v["id"], where + ".id");
  out.data.g = integer(v["g"], where + ".g");
  out.data.b = integer(v["b"], where + ".b");
  const json& fibres = v["fibres"];
  if (!fibres.is_array()) throw ParseError(where + ".fibres: expected an array");
  for (std::size_t k = 0; k < fibres.size(); ++k) {
    auto [p, q] = int_pair(fibres[k], where + ".fibres[" + std::to_string(k) + "]");
    out.data.fibres.push_back({p, q});
  }
  return out;
}

Edge parse_edge(const json& e, std::size_t index) {
  const std::string where = "edges[" + std::to_string(index) + "]";
  require_keys(e, {"id", "from", "to", "matrix"}, where);
  Edge out;
  out.id = identifier(e["id"], where + ".id");
  out.from = identifier(e["from"], where + ".from");
  out.to = identifier(e["to"], where + ".to");
  const json& m = e["matrix"];
  if (!m.is_array() || m.size() != 2) throw ParseError(where + ".matrix: expected [[a,b],[c,d]]");
  auto [a, b] = int_pair(m[0], where + ".matrix[0]");
  auto [c, d] = int_pair(m[1], where + ".matrix[1]");
  out.matrix = {a, b, c, d};
  return out;
}

}  // namespace

DecompositionGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  require_keys(doc, {"vertices", "edges"}, "document");
  if (!doc["vertices"].is_array()) throw ParseError("vertices: expected an array");
  if (!doc["edges"].is_array()) throw ParseError("edges: expected an array");

  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) vertices.push_back(parse_vertex(doc["vertices"][i], i));
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < doc["edges"].size(); ++j) edges.push_back(parse_edge(doc["edges"][j], j));
  try {
    return DecompositionGraph(std::move(vertices), std::move(edges));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

namespace {

ordered_json matrix_json(const Gl2Matrix& a) {
  return ordered_json::array({ordered_json::array({a.alpha, a.beta}), ordered_json::array({a.gamma, a.delta})});
}

}  // namespace

std::string serialize_graph(const DecompositionGraph& g) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (const Vertex& v : g.vertices()) {
    ordered_json fibres = ordered_json::array();
    for (const Fibre& f : v.data.fibres) fibres.push_back(ordered_json::array({f.p, f.q}));
    ordered_json jv;
    jv["id"] = v.id;
    jv["g"] = v.data.g;
    jv["fibres"] = std::move(fibres);
    jv["b"] = v.data.b;
    doc["vertices"].push_back(std::move(jv));
  }
  doc["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) {
    ordered_json je;
    je["id"] = e.id;
    je["from"] = e.from;
    je["to"] = e.to;
    je["matrix"] = matrix_json(e.matrix);
    doc["edges"].push_back(std::move(je));
  }
  return doc.dump(2) + "\n";
}

std::string report_to_json(const BoundReport& r) {
  ordered_json doc;
  doc["theorem"] = std::string(theorem_name(r.theorem));
  doc["total"] = r.total;
  ordered_json terms;
  terms["cycle"] = r.cycle_term;
  terms["phi"] = r.phi_term;
  terms["edges"] = ordered_json::array();
  for (const EdgeTerm& e : r.edge_terms) {
    ordered_json je;
    je["id"] = e.id;
    je["complexity"] = e.value;
    terms["edges"].push_back(std::move(je));
  }
  terms["vertices"] = ordered_json::array();
  for (const VertexTerm& v : r.vertex_terms) {
    ordered_json jv;
    jv["id"] = v.id;
    jv["base"] = v.base;
    jv["fibres"] = v.fibres;
    jv["f"] = v.f;
    jv["m"] = v.m;
    jv["M"] = v.M;
    terms["vertices"].push_back(std::move(jv));
  }
  doc["terms"] = std::move(terms);
  ordered_json w;
  w["tree"] = r.witness.tree;
  w["psi"] = ordered_json::object();
  for (const auto& [id, p] : r.witness.psi) w["psi"][id] = std::string(to_string(p));
  w["psi_prime"] = ordered_json::object();
  for (const auto& [id, p] : r.witness.psi_prime) w["psi_prime"][id] = std::string(to_string(p));
  doc["witness"] = std::move(w);
  doc["labelings_visited"] = r.labelings_visited;
  return doc.dump(2) + "\n";
}

}  // namespace gmc
