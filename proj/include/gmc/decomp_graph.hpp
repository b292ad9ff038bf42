#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gmc/gl2z.hpp"
#include "gmc/seifert.hpp"

namespace gmc {

struct Vertex {
  std::string id;
  SeifertData data;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string id;
  std::string from;
  std::string to;
  Gl2Matrix matrix;

  bool is_loop() const noexcept { return from == to; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Connected multigraph with Seifert pieces on the vertices and gluing
// matrices on the directed edges. Loops and parallel edges are allowed.
//
// Vertices and edges are kept sorted by id; vertex and edge indices used
// throughout the library refer to these sorted positions. Construction only
// checks referential integrity; admissibility is checked by validate().
class DecompositionGraph {
 public:
  DecompositionGraph() = default;

  // Throws DomainError on empty or duplicate ids, or on an edge endpoint
  // that names no vertex.
  DecompositionGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::size_t source(std::size_t edge) const { return ends_.at(edge).first; }
  std::size_t target(std::size_t edge) const { return ends_.at(edge).second; }

  // Throws DomainError for an unknown id.
  std::size_t vertex_index(const std::string& id) const;
  std::size_t edge_index(const std::string& id) const;

  // Total degree of each vertex; a loop counts twice.
  std::vector<std::int64_t> degrees() const;

  // Whether edge j is labelled +-H (the set E').
  bool is_special(std::size_t edge) const { return is_plus_minus_h(edges_.at(edge).matrix); }

  friend bool operator==(const DecompositionGraph& a, const DecompositionGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::map<std::string, std::size_t> vertex_pos_;
  std::map<std::string, std::size_t> edge_pos_;
};

// One failed admissibility clause. `clause` is one of: "graph", "class-S",
// "fibres", "determinant", "non-minimal", "normalization", "(i)", "(ii)(a)",
// "(ii)(b)", "(ii)(c)". `subject` is "vertex <id>", "edge <id>" or empty.
struct Violation {
  std::string clause;
  std::string subject;
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // informational, never a failure

  bool ok() const noexcept { return violations.empty(); }
};

// Checks every admissibility condition and reports all violations.
ValidationResult validate(const DecompositionGraph& g);

// Human-readable rendering, one line per violation/note, or "ok".
std::string format_validation(const ValidationResult& r);

struct VertexDegrees {
  std::int64_t d = 0;
  std::int64_t d_plus = 0;   // outgoing ends of non-+-H edges
  std::int64_t d_minus = 0;  // incoming ends of non-+-H edges
  std::int64_t d_zero = 0;   // ends of +-H edges, either direction

  friend bool operator==(const VertexDegrees&, const VertexDegrees&) = default;
};

std::vector<VertexDegrees> degree_stats(const DecompositionGraph& g);

struct EdgeNormalization {
  DecompositionGraph graph;
  std::string edge;
  std::int64_t k = 0;  // A -> A U^k, b[from] += k
  std::int64_t h = 0;  // A -> U^h A, b[to] -= h
};

// Applies both normalization moves to one edge, adjusting the b parameters
// of its endpoints so the manifold is unchanged. Throws DomainError when
// beta = 0 (non-minimal decomposition) or det != -1.
EdgeNormalization normalize_edge(const DecompositionGraph& g, const std::string& edge_id);

// normalize_edge over every edge, in id order. The moves list records the
// (k, h) applied to each edge whose matrix changed.
struct GraphNormalization {
  DecompositionGraph graph;
  std::vector<EdgeNormalization> moves;
};
GraphNormalization normalize_all(const DecompositionGraph& g);

}  // namespace gmc
