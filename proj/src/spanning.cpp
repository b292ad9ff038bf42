#include "gmc/spanning.hpp"

#include <algorithm>
#include <numeric>

#include "gmc/errors.hpp"

namespace gmc {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct GreedyResult {
  SpanningTree tree;
  std::int64_t phi = 0;
  std::size_t special_rank = 0;  // size of a maximal forest inside E'
};

GreedyResult greedy(const DecompositionGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw DomainError("graph has no vertices");
  DisjointSets sets(n);
  GreedyResult out;
  std::int64_t special_total = 0;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (!g.is_special(j)) continue;
    ++special_total;
    if (sets.unite(g.source(j), g.target(j))) out.tree.edges.push_back(j);
  }
  out.special_rank = out.tree.edges.size();
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (g.is_special(j)) continue;
    if (sets.unite(g.source(j), g.target(j))) out.tree.edges.push_back(j);
  }
  if (out.tree.edges.size() + 1 != n) throw DomainError("graph is not connected");
  std::sort(out.tree.edges.begin(), out.tree.edges.end());
  out.phi = special_total - static_cast<std::int64_t>(out.special_rank);
  return out;
}

}  // namespace

bool SpanningTree::contains(std::size_t edge) const {
  return std::binary_search(edges.begin(), edges.end(), edge);
}

std::vector<std::string> edge_ids(const DecompositionGraph& g, const SpanningTree& t) {
  std::vector<std::string> ids;
  ids.reserve(t.edges.size());
  for (std::size_t j : t.edges) ids.push_back(g.edges().at(j).id);
  return ids;
}

bool is_spanning_tree(const DecompositionGraph& g, const SpanningTree& t) {
  if (g.vertex_count() == 0 || t.edges.size() + 1 != g.vertex_count()) return false;
  DisjointSets sets(g.vertex_count());
  for (std::size_t j : t.edges) {
    if (j >= g.edge_count() || !sets.unite(g.source(j), g.target(j))) return false;
  }
  return true;
}

std::int64_t phi(const DecompositionGraph& g, const SpanningTree& t) {
  std::int64_t count = 0;
  for (std::size_t j = 0; j < g.edge_count(); ++j)
    if (g.is_special(j) && !t.contains(j)) ++count;
  return count;
}

std::int64_t capital_phi(const DecompositionGraph& g) { return greedy(g).phi; }

SpanningTree greedy_optimal_tree(const DecompositionGraph& g) { return greedy(g).tree; }

namespace {

// Include-first backtracking over edges in index order yields trees in
// lexicographic order. A branch is cut when it can no longer collect
// `special_rank` +-H edges, which is exactly the optimality condition.
class OptimalTreeEnumerator {
 public:
  OptimalTreeEnumerator(const DecompositionGraph& g, std::size_t special_rank, std::uint64_t cap)
      : g_(g), need_special_(special_rank), cap_(cap), special_after_(g.edge_count() + 1, 0) {
    for (std::size_t j = g.edge_count(); j-- > 0;)
      special_after_[j] = special_after_[j + 1] + (g.is_special(j) && !g.edges()[j].is_loop());
  }

  std::vector<SpanningTree> run() {
    chosen_.clear();
    recurse(0, 0, std::vector<std::size_t>(iota_vertices()));
    return std::move(out_);
  }

 private:
  std::vector<std::size_t> iota_vertices() const {
    std::vector<std::size_t> comp(g_.vertex_count());
    std::iota(comp.begin(), comp.end(), 0);
    return comp;
  }

  // comp[v] is a component label; n is small, so relabelling is cheap.
  void recurse(std::size_t next, std::size_t specials, std::vector<std::size_t> comp) {
    const std::size_t need = g_.vertex_count() - 1;
    if (chosen_.size() == need) {
      if (specials == need_special_) {
        if (out_.size() >= cap_)
          throw CapExceededError("optimal spanning tree enumeration exceeds the cap of " +
                                     std::to_string(cap_) + " trees",
                                 cap_ + 1);
        out_.push_back(SpanningTree{chosen_});
      }
      return;
    }
    if (next >= g_.edge_count()) return;
    if (g_.edge_count() - next < need - chosen_.size()) return;
    if (specials + special_after_[next] < need_special_) return;

    const std::size_t a = comp[g_.source(next)], b = comp[g_.target(next)];
    if (a != b) {
      std::vector<std::size_t> merged = comp;
      for (auto& c : merged)
        if (c == a) c = b;
      chosen_.push_back(next);
      recurse(next + 1, specials + (g_.is_special(next) ? 1 : 0), std::move(merged));
      chosen_.pop_back();
    }
    recurse(next + 1, specials, std::move(comp));
  }

  const DecompositionGraph& g_;
  std::size_t need_special_;
  std::uint64_t cap_;
  std::vector<std::size_t> special_after_;
  std::vector<std::size_t> chosen_;
  std::vector<SpanningTree> out_;
};

}  // namespace

std::vector<SpanningTree> optimal_trees(const DecompositionGraph& g, std::uint64_t cap) {
  const GreedyResult gr = greedy(g);
  return OptimalTreeEnumerator(g, gr.special_rank, cap).run();
}

}  // namespace gmc
