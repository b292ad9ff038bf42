#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gmc/decomp_graph.hpp"
#include "gmc/spanning.hpp"

namespace gmc {

enum class Theorem { regular, tree, general };

std::string_view theorem_name(Theorem t);

// Labels of tree +-H edges. Enumeration order: plus < minus.
enum class Psi : std::uint8_t { plus, minus };

// Labels of non-tree +-H edges, in enumeration order.
enum class PsiPrime : std::uint8_t { plus_plus, plus, plus_minus, minus_plus, minus, minus_minus };

std::string_view to_string(Psi p);
std::string_view to_string(PsiPrime p);

// Contribution of one labelled +-H edge to the (plus, minus) degree counts of
// its source and target vertex.
struct EndIncrements {
  std::int64_t source_plus = 0;
  std::int64_t source_minus = 0;
  std::int64_t target_plus = 0;
  std::int64_t target_minus = 0;
};
EndIncrements increments(Psi p);
EndIncrements increments(PsiPrime p);

// Piecewise penalty: m - b below [m, M], 0 inside, b - M above.
// Requires m < M, m <= 1, M >= -1; throws DomainError otherwise.
std::int64_t f(std::int64_t m, std::int64_t M, std::int64_t b);

struct SearchLimits {
  std::uint64_t max_trees = 1'000'000;
  std::uint64_t max_assignments = std::uint64_t{1} << 20;  // per tree
};

// Per-vertex state of one labelling visited by the search. plus/minus hold
// the combined psi and psi' counts; base holds d, d+, d-.
struct LabelingSnapshot {
  std::span<const VertexDegrees> base;
  std::span<const std::int64_t> plus;
  std::span<const std::int64_t> minus;
  std::span<const std::int64_t> m;
  std::span<const std::int64_t> M;
};
using LabelingObserver = std::function<void(const LabelingSnapshot&)>;

struct Witness {
  std::vector<std::string> tree;                            // edge ids
  std::vector<std::pair<std::string, Psi>> psi;             // by edge id
  std::vector<std::pair<std::string, PsiPrime>> psi_prime;  // by edge id

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct EdgeTerm {
  std::string id;
  std::int64_t value = 0;  // S(|beta|/|delta|) - 1
};

struct VertexTerm {
  std::string id;
  std::int64_t base = 0;    // 3(d + r + 2h - 2)
  std::int64_t fibres = 0;  // sum of S(p/q) - 2
  std::int64_t f = 0;       // f_{m,M}(b) at the witness
  std::int64_t m = 0;
  std::int64_t M = 0;
};

struct BoundReport {
  Theorem theorem = Theorem::regular;
  std::int64_t total = 0;
  std::int64_t cycle_term = 0;  // 5(|E| - |V| + 1)
  std::int64_t phi_term = 0;    // Phi(G); 0 outside the general theorem
  std::vector<EdgeTerm> edge_terms;
  std::vector<VertexTerm> vertex_terms;
  Witness witness;
  std::uint64_t labelings_visited = 0;

  // Recomputes the sum of all terms.
  std::int64_t sum_of_terms() const;
};

// Every +-H edge absent: the bound with base degrees only.
// Throws InapplicableError if some edge is +-H, DomainError on invalid input.
BoundReport bound_regular(const DecompositionGraph& g);

// Some spanning tree holds every +-H edge. Minimizes over all sign labelings
// of the +-H edges. Throws InapplicableError if Phi(G) > 0.
BoundReport bound_tree(const DecompositionGraph& g, const SearchLimits& limits = {},
                       const LabelingObserver& observer = {});

// Any valid graph. Minimizes over optimal trees and both label families.
BoundReport bound_general(const DecompositionGraph& g, const SearchLimits& limits = {},
                          const LabelingObserver& observer = {});

// The most specialized applicable theorem.
BoundReport best_bound(const DecompositionGraph& g, const SearchLimits& limits = {},
                       const LabelingObserver& observer = {});

BoundReport bound_with(Theorem t, const DecompositionGraph& g, const SearchLimits& limits = {},
                       const LabelingObserver& observer = {});

// Sum over vertices of f_{m_i,M_i}(b_i) for the labelling in `w` (its tree
// field decides which +-H edges take psi and which take psi'). Used to
// re-check reported witnesses.
std::int64_t evaluate_witness(const DecompositionGraph& g, const Witness& w);

// Size of the labelling search the general theorem needs, summed over the
// optimal trees (saturating).
std::uint64_t general_search_size(const DecompositionGraph& g, const SearchLimits& limits = {});

}  // namespace gmc
