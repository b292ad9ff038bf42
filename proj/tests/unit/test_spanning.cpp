#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gmc/errors.hpp"
#include "gmc/oracle.hpp"
#include "gmc/spanning.hpp"
#include "test_support.hpp"

using namespace gmc;
using gmc::testing::load_fixture;

namespace {

const Gl2Matrix kN{1, 2, 1, 1};

DecompositionGraph graph(std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, bool>>& es) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back({gmc::testing::vertex_id(i), {0, {{2, 1}, {2, 1}}, 0}});
  std::vector<Edge> out;
  for (std::size_t j = 0; j < es.size(); ++j) {
    const auto& [a, b, h] = es[j];
    out.push_back({gmc::testing::edge_id(j), gmc::testing::vertex_id(a), gmc::testing::vertex_id(b), h ? kH : kN});
  }
  return DecompositionGraph(vs, out);
}

// Phi = 0 iff the special non-loop edges are acyclic and there is no special loop.
bool special_edges_form_forest(const DecompositionGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (!g.is_special(j)) continue;
    const auto a = find(g.source(j)), b = find(g.target(j));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

TEST_CASE("phi on fixed trees") {
  const auto tree = load_fixture("regular_pair.json");
  CHECK(phi(tree, SpanningTree{{0}}) == 0);

  const auto par = load_fixture("parallel_h.json");
  CHECK(phi(par, SpanningTree{{0}}) == 1);
  CHECK(phi(par, SpanningTree{{1}}) == 1);

  const auto tri = graph(3, {{0, 1, true}, {1, 2, false}, {2, 0, false}});
  CHECK(phi(tri, SpanningTree{{0, 1}}) == 0);
  CHECK(phi(tri, SpanningTree{{1, 2}}) == 1);

  CHECK(is_spanning_tree(tri, SpanningTree{{0, 2}}));
  CHECK_FALSE(is_spanning_tree(tri, SpanningTree{{0}}));
  CHECK(edge_ids(tri, SpanningTree{{0, 2}}) == std::vector<std::string>{"e00", "e02"});
}

TEST_CASE("capital phi examples") {
  CHECK(capital_phi(graph(4, {{0, 1, true}, {1, 2, true}, {1, 3, true}, {3, 0, false}})) == 0);
  CHECK(capital_phi(load_fixture("parallel_h.json")) == 1);
  CHECK(capital_phi(graph(1, {{0, 0, true}, {0, 0, false}})) == 1);
  CHECK_THROWS_AS(capital_phi(graph(2, {{0, 0, true}})), DomainError);

  const auto par = load_fixture("parallel_h.json");
  const auto t = greedy_optimal_tree(par);
  CHECK(is_spanning_tree(par, t));
  CHECK(phi(par, t) == 1);
}

TEST_CASE("optimal tree enumeration examples") {
  const auto tree = load_fixture("regular_pair.json");
  CHECK(optimal_trees(tree, 10) == std::vector<SpanningTree>{SpanningTree{{0}}});

  const auto par = load_fixture("parallel_h.json");
  CHECK(optimal_trees(par, 10) == std::vector<SpanningTree>{SpanningTree{{0}}, SpanningTree{{1}}});

  const auto mixed = graph(2, {{0, 1, false}, {0, 1, true}});
  CHECK(optimal_trees(mixed, 10) == std::vector<SpanningTree>{SpanningTree{{1}}});

  CHECK_THROWS_AS(optimal_trees(par, 1), CapExceededError);
  CHECK_NOTHROW(optimal_trees(par, 2));
}

TEST_CASE("greedy and enumeration agree with exhaustive search") {
  std::mt19937_64 rng(2024);
  gmc::testing::GraphShape shape;
  shape.max_vertices = 7;
  shape.max_edges = 12;
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = gmc::testing::random_graph(rng, shape);
    const auto all = oracle::all_spanning_trees(g, 100000);
    REQUIRE_FALSE(all.empty());
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& t : all) best = std::min(best, phi(g, t));

    CHECK(capital_phi(g) == best);
    CHECK(oracle::bruteforce_phi(g) == best);
    CHECK(phi(g, greedy_optimal_tree(g)) == best);
    CHECK((best == 0) == special_edges_form_forest(g));

    std::vector<SpanningTree> expected;
    for (const auto& t : all)
      if (phi(g, t) == best) expected.push_back(t);
    const auto got = optimal_trees(g, 100000);
    CHECK(got == expected);
    for (const auto& t : got) CHECK(is_spanning_tree(g, t));
  }
}
