#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gmc/decomp_graph.hpp"

namespace gmc {

// Edge indices (into DecompositionGraph::edges(), i.e. id order) of a
// spanning tree, sorted ascending. Never contains a loop.
struct SpanningTree {
  std::vector<std::size_t> edges;

  bool contains(std::size_t edge) const;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

std::vector<std::string> edge_ids(const DecompositionGraph& g, const SpanningTree& t);

// Whether t is a spanning tree of g (|V|-1 non-loop edges, acyclic).
bool is_spanning_tree(const DecompositionGraph& g, const SpanningTree& t);

// Number of +-H edges outside the tree.
std::int64_t phi(const DecompositionGraph& g, const SpanningTree& t);

// Minimum of phi over all spanning trees, by the matroid greedy rule:
// +-H edges are inserted into a spanning forest first, the rest complete it.
// Throws DomainError when g is not connected.
std::int64_t capital_phi(const DecompositionGraph& g);

// The tree built by the greedy rule above (always optimal).
SpanningTree greedy_optimal_tree(const DecompositionGraph& g);

// Every spanning tree with phi(T) = capital_phi(g), in lexicographic order of
// their edge-index sets. Throws CapExceededError as soon as more than `cap`
// trees would be produced.
std::vector<SpanningTree> optimal_trees(const DecompositionGraph& g, std::uint64_t cap);

}  // namespace gmc
