#include "gmc/decomp_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gmc/checked.hpp"
#include "gmc/errors.hpp"

namespace gmc {

DecompositionGraph::DecompositionGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id.empty()) throw DomainError("vertex id must be non-empty");
    if (!vertex_pos_.emplace(vertices_[i].id, i).second)
      throw DomainError("duplicate vertex id '" + vertices_[i].id + "'");
  }
  ends_.reserve(edges_.size());
  for (std::size_t j = 0; j < edges_.size(); ++j) {
    const Edge& e = edges_[j];
    if (e.id.empty()) throw DomainError("edge id must be non-empty");
    if (!edge_pos_.emplace(e.id, j).second) throw DomainError("duplicate edge id '" + e.id + "'");
    auto from = vertex_pos_.find(e.from);
    auto to = vertex_pos_.find(e.to);
    if (from == vertex_pos_.end())
      throw DomainError("edge '" + e.id + "' starts at unknown vertex '" + e.from + "'");
    if (to == vertex_pos_.end())
      throw DomainError("edge '" + e.id + "' ends at unknown vertex '" + e.to + "'");
    ends_.emplace_back(from->second, to->second);
  }
}

std::size_t DecompositionGraph::vertex_index(const std::string& id) const {
  auto it = vertex_pos_.find(id);
  if (it == vertex_pos_.end()) throw DomainError("unknown vertex '" + id + "'");
  return it->second;
}

std::size_t DecompositionGraph::edge_index(const std::string& id) const {
  auto it = edge_pos_.find(id);
  if (it == edge_pos_.end()) throw DomainError("unknown edge '" + id + "'");
  return it->second;
}

std::vector<std::int64_t> DecompositionGraph::degrees() const {
  std::vector<std::int64_t> deg(vertices_.size(), 0);
  for (const auto& [from, to] : ends_) {
    ++deg[from];
    ++deg[to];
  }
  return deg;
}

namespace {

bool connected(const DecompositionGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    std::size_t a = find(g.source(j)), b = find(g.target(j));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

void check_pair_conditions(const DecompositionGraph& g, std::vector<Violation>& out) {
  if (g.vertex_count() != 2 || g.edge_count() != 1 || g.edges()[0].is_loop()) return;
  const Edge& e = g.edges()[0];
  const SeifertData& s1 = g.vertices()[g.source(0)].data;
  const SeifertData& s2 = g.vertices()[g.target(0)].data;
  if (!is_twisted_pair_piece(s1) || !is_twisted_pair_piece(s2)) return;
  const std::int64_t b1 = s1.b, b2 = s2.b;
  const Gl2Matrix& a = e.matrix;
  const std::string subject = "edge " + e.id;
  auto pair_str = [&] {
    std::ostringstream os;
    os << "(b1,b2) = (" << b1 << "," << b2 << ")";
    return os.str();
  };

  if (is_plus_minus_h(a) && ((b1 == 0 && b2 == 0) || (b1 == -2 && b2 == -2)))
    out.push_back({"(ii)(a)", subject, "matrix +-H with " + pair_str() + " is excluded"});

  // Compare up to sign with the two one-parameter families, beta > 1.
  for (const Gl2Matrix& m : {a, -a}) {
    const std::int64_t beta = m.beta;
    if (beta <= 1) continue;
    if (m == Gl2Matrix{1, beta, 1, beta - 1} && b1 == -1 && b2 == -2)
      out.push_back({"(ii)(b)", subject,
                     "matrix +-(1 beta / 1 beta-1) with " + pair_str() + " is excluded"});
    if (m == Gl2Matrix{beta - 1, beta, 1, 1} && b1 == 0 && b2 == -1)
      out.push_back({"(ii)(c)", subject,
                     "matrix +-(beta-1 beta / 1 1) with " + pair_str() + " is excluded"});
  }
}

}  // namespace

ValidationResult validate(const DecompositionGraph& g) {
  ValidationResult r;
  auto& out = r.violations;

  if (g.edge_count() == 0)
    out.push_back({"graph", "", "non-trivial graph required: the edge set is empty"});
  if (g.vertex_count() == 0)
    out.push_back({"graph", "", "the vertex set is empty"});
  else if (!connected(g))
    out.push_back({"graph", "", "the underlying graph is not connected"});

  const auto deg = g.degrees();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Vertex& v = g.vertices()[i];
    const std::string subject = "vertex " + v.id;
    for (auto& msg : check_fibres(v.data)) out.push_back({"fibres", subject, std::move(msg)});
    for (auto& msg : validate_class_s(v.data, deg[i])) out.push_back({"class-S", subject, std::move(msg)});
  }

  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edges()[j];
    const std::string subject = "edge " + e.id;
    if (e.is_loop()) r.notes.push_back(subject + " is a loop at vertex " + e.from);
    if (e.matrix.determinant() != -1) {
      out.push_back({"determinant", subject, "matrix " + to_string(e.matrix) + " must have determinant -1"});
      continue;
    }
    if (e.matrix.beta == 0) {
      out.push_back({"non-minimal", subject,
                     "matrix " + to_string(e.matrix) +
                         " has beta = 0: the gluing maps a fibre to a fibre, so the "
                         "decomposition is not minimal"});
      continue;
    }
    if (!is_normalized(e.matrix))
      out.push_back({"normalization", subject, "matrix " + to_string(e.matrix) + " is not normalized"});

    if (is_plus_minus_h(e.matrix)) {
      for (std::size_t end : {g.source(j), g.target(j)}) {
        const Vertex& v = g.vertices()[end];
        if (is_twisted_pair_piece(v.data) && v.data.b == -1 && deg[end] == 1) {
          out.push_back({"(i)", subject,
                         "matrix +-H touches the piece (0,1,(2,1),(2,1),-1) at vertex " + v.id});
          break;
        }
      }
    }
  }

  check_pair_conditions(g, out);
  return r;
}

std::string format_validation(const ValidationResult& r) {
  std::ostringstream os;
  if (r.ok()) os << "ok\n";
  for (const Violation& v : r.violations) {
    os << "violation [" << v.clause << "]";
    if (!v.subject.empty()) os << " " << v.subject;
    os << ": " << v.message << "\n";
  }
  for (const std::string& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::vector<VertexDegrees> degree_stats(const DecompositionGraph& g) {
  std::vector<VertexDegrees> stats(g.vertex_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    auto& s = stats[g.source(j)];
    auto& t = stats[g.target(j)];
    ++s.d;
    ++t.d;
    if (g.is_special(j)) {
      ++s.d_zero;
      ++t.d_zero;
    } else {
      ++s.d_plus;
      ++t.d_minus;
    }
  }
  return stats;
}

EdgeNormalization normalize_edge(const DecompositionGraph& g, const std::string& edge_id) {
  const std::size_t j = g.edge_index(edge_id);
  const Normalization n = normalize(g.edges()[j].matrix);

  std::vector<Vertex> vertices = g.vertices();
  std::vector<Edge> edges = g.edges();
  edges[j].matrix = n.matrix;
  auto& from_b = vertices[g.source(j)].data.b;
  from_b = checked::add(from_b, n.k);
  auto& to_b = vertices[g.target(j)].data.b;
  to_b = checked::sub(to_b, n.h);
  return {DecompositionGraph(std::move(vertices), std::move(edges)), edge_id, n.k, n.h};
}

GraphNormalization normalize_all(const DecompositionGraph& g) {
  GraphNormalization out{g, {}};
  for (const Edge& e : g.edges()) {
    EdgeNormalization step = normalize_edge(out.graph, e.id);
    if (step.k != 0 || step.h != 0) {
      out.graph = step.graph;
      out.moves.push_back(std::move(step));
    }
  }
  return out;
}

}  // namespace gmc
