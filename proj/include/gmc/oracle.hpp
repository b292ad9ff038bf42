#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmc/bounds.hpp"
#include "gmc/decomp_graph.hpp"
#include "gmc/spanning.hpp"

// Brute-force recomputation of everything the optimized paths compute. The
// code here shares only the type definitions, f() and the literal degree
// definitions with the production modules.
namespace gmc::oracle {

// Sum of continued fraction coefficients by the subtractive Euclidean
// algorithm (one step per unit of every coefficient).
std::int64_t subtractive_cf_sum(std::int64_t p, std::int64_t q);

// Every spanning tree, by testing each (|V|-1)-subset of edges in
// lexicographic order. Throws CapExceededError beyond `max_trees` trees.
std::vector<SpanningTree> all_spanning_trees(const DecompositionGraph& g, std::uint64_t max_trees);

std::int64_t bruteforce_phi(const DecompositionGraph& g, std::uint64_t max_trees = 1'000'000);

struct MinF {
  std::int64_t value = 0;
  Witness witness;
  std::uint64_t labelings = 0;
};

// Plain nested-loop minimum of sum_i f_{m_i,M_i}(b_i). For Theorem::tree the
// labels range over all +-H edges (Phi must be 0); for Theorem::general over
// every optimal tree and both label families; Theorem::regular evaluates the
// single empty labelling. Ties keep the first labelling in lexicographic
// order. The labelling cap applies per tree.
MinF bruteforce_min_f(const DecompositionGraph& g, Theorem theorem, const SearchLimits& limits = {});

struct OracleBound {
  Theorem theorem = Theorem::general;
  std::int64_t total = 0;
  std::int64_t phi = 0;
  MinF min_f;
};

// The whole bound recomputed from scratch: edge complexities by Farey
// search, continued fraction sums by subtraction, Phi by enumeration.
OracleBound bruteforce_bound(const DecompositionGraph& g, Theorem theorem,
                             const SearchLimits& limits = {});

struct LemmaReport {
  std::int64_t beta_max = 0;
  std::uint64_t matrices = 0;  // normalized matrices checked, +-H included
  std::vector<std::string> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }
};

// Enumerates every normalized determinant -1 matrix with 2 <= |beta| <=
// beta_max, plus +-H, and checks the closed form complexity against the
// four-distance search, including that d(A tau_-, tau_+) attains it.
LemmaReport verify_lemma(std::int64_t beta_max);

std::string format_lemma_report(const LemmaReport& r);

}  // namespace gmc::oracle
