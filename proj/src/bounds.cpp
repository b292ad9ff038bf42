#include "gmc/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gmc/checked.hpp"
#include "gmc/errors.hpp"
#include "gmc/farey.hpp"

namespace gmc {

using checked::add;
using checked::mul;
using checked::sub;

std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::regular: return "regular";
    case Theorem::tree: return "tree";
    case Theorem::general: return "general";
  }
  return "?";
}

std::string_view to_string(Psi p) { return p == Psi::plus ? "+" : "-"; }

std::string_view to_string(PsiPrime p) {
  switch (p) {
    case PsiPrime::plus_plus: return "++";
    case PsiPrime::plus: return "+";
    case PsiPrime::plus_minus: return "+-";
    case PsiPrime::minus_plus: return "-+";
    case PsiPrime::minus: return "-";
    case PsiPrime::minus_minus: return "--";
  }
  return "?";
}

EndIncrements increments(Psi p) {
  if (p == Psi::plus) return {1, 0, 1, 0};
  return {0, 1, 0, 1};
}

EndIncrements increments(PsiPrime p) {
  switch (p) {
    case PsiPrime::plus_plus: return {2, 0, 1, 0};
    case PsiPrime::plus: return {1, 0, 2, 0};
    case PsiPrime::plus_minus: return {1, 0, 0, 1};
    case PsiPrime::minus_plus: return {0, 1, 1, 0};
    case PsiPrime::minus: return {0, 1, 0, 2};
    case PsiPrime::minus_minus: return {0, 2, 0, 1};
  }
  return {};
}

std::int64_t f(std::int64_t m, std::int64_t M, std::int64_t b) {
  if (!(m < M && m <= 1 && M >= -1))
    throw DomainError("f_{m,M} needs m < M, m <= 1, M >= -1 (got m = " + std::to_string(m) +
                      ", M = " + std::to_string(M) + ")");
  if (b < m) return sub(m, b);
  if (b > M) return sub(b, M);
  return 0;
}

std::int64_t BoundReport::sum_of_terms() const {
  std::int64_t s = add(cycle_term, phi_term);
  for (const auto& e : edge_terms) s = add(s, e.value);
  for (const auto& v : vertex_terms) s = add(add(add(s, v.base), v.fibres), v.f);
  return s;
}

namespace {

void require_valid(const DecompositionGraph& g) {
  const ValidationResult r = validate(g);
  if (!r.ok()) {
    const Violation& v = r.violations.front();
    throw DomainError("graph is not a valid decomposition graph: [" + v.clause + "] " +
                      (v.subject.empty() ? "" : v.subject + ": ") + v.message);
  }
}

// Per-vertex data that does not depend on the labelling.
struct VertexConstants {
  std::int64_t lo = 0;  // -r - h - d^- + 1
  std::int64_t hi = 0;  //  h + d^+ - 1
  std::int64_t b = 0;
};

// Fills every labelling-independent term of the report.
std::vector<VertexConstants> fixed_terms(const DecompositionGraph& g,
                                         const std::vector<VertexDegrees>& stats,
                                         BoundReport& report) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto e = static_cast<std::int64_t>(g.edge_count());
  report.cycle_term = mul(5, e - n + 1);

  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (g.is_special(j)) continue;
    report.edge_terms.push_back({g.edges()[j].id, matrix_complexity(g.edges()[j].matrix)});
  }

  std::vector<VertexConstants> constants;
  constants.reserve(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Vertex& v = g.vertices()[i];
    const std::int64_t h = handle_count(v.data);
    const std::int64_t r = v.data.r();
    VertexTerm term;
    term.id = v.id;
    term.base = mul(3, add(add(stats[i].d, r), sub(mul(2, h), 2)));
    for (const Fibre& fb : v.data.fibres) term.fibres = add(term.fibres, cf_sum(fb.p, fb.q) - 2);
    report.vertex_terms.push_back(std::move(term));
    constants.push_back({sub(sub(1, r), add(h, stats[i].d_minus)), sub(add(h, stats[i].d_plus), 1),
                         v.data.b});
  }
  return constants;
}

std::uint64_t labelling_count(std::size_t psi_edges, std::size_t prime_edges) {
  std::uint64_t n = 1;
  for (std::size_t k = 0; k < psi_edges; ++k) n = checked::sat_mul(n, 2);
  for (std::size_t k = 0; k < prime_edges; ++k) n = checked::sat_mul(n, 6);
  return n;
}

struct SearchResult {
  std::int64_t best = 0;
  std::vector<std::uint8_t> digits;  // psi digits first, then psi' digits
  std::vector<std::int64_t> m;
  std::vector<std::int64_t> M;
  std::vector<std::int64_t> fvals;
  std::uint64_t visited = 0;
};

// Exhaustive minimization of sum_i f over the labellings of `psi_edges`
// (two values each) and `prime_edges` (six values each), visited in
// lexicographic order; the first minimizer wins.
// Consecutive labellings differ in a suffix of digits; only the vertices at
// the ends of the changed edges are re-evaluated.
class LabellingSearch {
 public:
  LabellingSearch(const DecompositionGraph& g, const std::vector<VertexDegrees>& stats,
                  const std::vector<VertexConstants>& constants,
                  std::vector<std::size_t> psi_edges, std::vector<std::size_t> prime_edges,
                  const LabelingObserver& observer)
      : g_(g),
        stats_(stats),
        constants_(constants),
        observer_(observer),
        positions_(std::move(psi_edges)),
        psi_count_(positions_.size()) {
    positions_.insert(positions_.end(), prime_edges.begin(), prime_edges.end());
    const std::size_t n = g.vertex_count();
    plus_.assign(n, 0);
    minus_.assign(n, 0);
    m_.assign(n, 0);
    M_.assign(n, 0);
    fvals_.assign(n, 0);
    digits_.assign(positions_.size(), 0);
  }

  SearchResult run() {
    for (std::size_t p = 0; p < positions_.size(); ++p) apply(p, +1);
    for (std::size_t i = 0; i < g_.vertex_count(); ++i) refresh(i);
    sum_ = 0;
    for (auto v : fvals_) sum_ += v;

    SearchResult result;
    bool have = false;
    while (true) {
      ++result.visited;
      if (observer_) observer_(LabelingSnapshot{stats_, plus_, minus_, m_, M_});
      if (!have || sum_ < result.best) {
        have = true;
        result.best = sum_;
        result.digits = digits_;
        result.m = m_;
        result.M = M_;
        result.fvals = fvals_;
        if (sum_ == 0) break;  // f >= 0, nothing later can be strictly better
      }
      if (!advance()) break;
    }
    return result;
  }

 private:
  std::uint8_t radix(std::size_t p) const { return p < psi_count_ ? 2 : 6; }

  EndIncrements inc(std::size_t p) const {
    return p < psi_count_ ? increments(static_cast<Psi>(digits_[p]))
                          : increments(static_cast<PsiPrime>(digits_[p]));
  }

  void apply(std::size_t p, std::int64_t sign) {
    const EndIncrements e = inc(p);
    const std::size_t s = g_.source(positions_[p]), t = g_.target(positions_[p]);
    plus_[s] += sign * e.source_plus;
    minus_[s] += sign * e.source_minus;
    plus_[t] += sign * e.target_plus;
    minus_[t] += sign * e.target_minus;
  }

  void refresh(std::size_t i) {
    const VertexConstants& c = constants_[i];
    m_[i] = sub(c.lo, minus_[i]);
    M_[i] = add(c.hi, plus_[i]);
    if (!(m_[i] < M_[i] && m_[i] <= 1 && M_[i] >= -1))
      throw std::logic_error("labelling search reached m >= M or an out-of-range window at vertex " +
                             g_.vertices()[i].id);
    fvals_[i] = f(m_[i], M_[i], c.b);
  }

  void touch(std::size_t p) {
    for (std::size_t v : {g_.source(positions_[p]), g_.target(positions_[p])}) {
      sum_ -= fvals_[v];
      refresh(v);
      sum_ += fvals_[v];
    }
  }

  // Odometer step; the last position changes fastest.
  bool advance() {
    std::size_t p = positions_.size();
    while (p-- > 0) {
      apply(p, -1);
      const bool carry = digits_[p] + 1 >= radix(p);
      digits_[p] = carry ? 0 : digits_[p] + 1;
      apply(p, +1);
      touch(p);
      if (!carry) return true;
    }
    return false;
  }

  const DecompositionGraph& g_;
  const std::vector<VertexDegrees>& stats_;
  const std::vector<VertexConstants>& constants_;
  const LabelingObserver& observer_;
  std::vector<std::size_t> positions_;
  std::size_t psi_count_;
  std::vector<std::uint8_t> digits_;
  std::vector<std::int64_t> plus_, minus_, m_, M_, fvals_;
  std::int64_t sum_ = 0;
};

void fill_from_search(const DecompositionGraph& g, const std::vector<std::size_t>& psi_edges,
                      const std::vector<std::size_t>& prime_edges, const SearchResult& s,
                      BoundReport& report) {
  report.witness.psi.clear();
  report.witness.psi_prime.clear();
  for (std::size_t k = 0; k < psi_edges.size(); ++k)
    report.witness.psi.emplace_back(g.edges()[psi_edges[k]].id, static_cast<Psi>(s.digits[k]));
  for (std::size_t k = 0; k < prime_edges.size(); ++k)
    report.witness.psi_prime.emplace_back(g.edges()[prime_edges[k]].id,
                                          static_cast<PsiPrime>(s.digits[psi_edges.size() + k]));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    report.vertex_terms[i].f = s.fvals[i];
    report.vertex_terms[i].m = s.m[i];
    report.vertex_terms[i].M = s.M[i];
  }
}

std::vector<std::size_t> special_edges(const DecompositionGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < g.edge_count(); ++j)
    if (g.is_special(j)) out.push_back(j);
  return out;
}

void check_cap(std::uint64_t size, const SearchLimits& limits, std::uint64_t total_needed) {
  if (size > limits.max_assignments)
    throw CapExceededError("labelling search needs " + std::to_string(total_needed) +
                               " assignments; the per-tree cap is " +
                               std::to_string(limits.max_assignments),
                           total_needed);
}

}  // namespace

BoundReport bound_regular(const DecompositionGraph& g) {
  require_valid(g);
  if (!special_edges(g).empty())
    throw InapplicableError("the regular theorem needs every edge matrix different from +-H");
  const auto stats = degree_stats(g);
  BoundReport report;
  report.theorem = Theorem::regular;
  const auto constants = fixed_terms(g, stats, report);
  const LabelingObserver none;
  const SearchResult s = LabellingSearch(g, stats, constants, {}, {}, none).run();
  fill_from_search(g, {}, {}, s, report);
  report.labelings_visited = s.visited;
  report.total = report.sum_of_terms();
  return report;
}

BoundReport bound_tree(const DecompositionGraph& g, const SearchLimits& limits,
                       const LabelingObserver& observer) {
  require_valid(g);
  if (capital_phi(g) != 0)
    throw InapplicableError(
        "the tree theorem needs a spanning tree containing every +-H edge (Phi(G) > 0)");
  const auto stats = degree_stats(g);
  BoundReport report;
  report.theorem = Theorem::tree;
  const auto constants = fixed_terms(g, stats, report);
  const auto specials = special_edges(g);
  const std::uint64_t size = labelling_count(specials.size(), 0);
  check_cap(size, limits, size);
  const SearchResult s = LabellingSearch(g, stats, constants, specials, {}, observer).run();
  report.witness.tree = edge_ids(g, greedy_optimal_tree(g));
  fill_from_search(g, specials, {}, s, report);
  report.labelings_visited = s.visited;
  report.total = report.sum_of_terms();
  return report;
}

namespace {

struct TreeDomains {
  std::vector<std::size_t> psi;
  std::vector<std::size_t> prime;
};

TreeDomains domains(const DecompositionGraph& g, const SpanningTree& t) {
  TreeDomains d;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (!g.is_special(j)) continue;
    (t.contains(j) ? d.psi : d.prime).push_back(j);
  }
  return d;
}

}  // namespace

std::uint64_t general_search_size(const DecompositionGraph& g, const SearchLimits& limits) {
  std::uint64_t total = 0;
  for (const SpanningTree& t : optimal_trees(g, limits.max_trees)) {
    const TreeDomains d = domains(g, t);
    total = checked::sat_add(total, labelling_count(d.psi.size(), d.prime.size()));
  }
  return total;
}

BoundReport bound_general(const DecompositionGraph& g, const SearchLimits& limits,
                          const LabelingObserver& observer) {
  require_valid(g);
  const auto stats = degree_stats(g);
  BoundReport report;
  report.theorem = Theorem::general;
  const auto constants = fixed_terms(g, stats, report);
  report.phi_term = capital_phi(g);

  const std::vector<SpanningTree> trees = optimal_trees(g, limits.max_trees);
  std::vector<TreeDomains> doms;
  std::uint64_t total = 0, largest = 0;
  for (const SpanningTree& t : trees) {
    doms.push_back(domains(g, t));
    const std::uint64_t size = labelling_count(doms.back().psi.size(), doms.back().prime.size());
    total = checked::sat_add(total, size);
    largest = std::max(largest, size);
  }
  check_cap(largest, limits, total);

  bool have = false;
  std::int64_t best = 0;
  for (std::size_t k = 0; k < trees.size(); ++k) {
    const SearchResult s =
        LabellingSearch(g, stats, constants, doms[k].psi, doms[k].prime, observer).run();
    report.labelings_visited += s.visited;
    if (!have || s.best < best) {
      have = true;
      best = s.best;
      report.witness.tree = edge_ids(g, trees[k]);
      fill_from_search(g, doms[k].psi, doms[k].prime, s, report);
    }
    if (best == 0) break;
  }
  report.total = report.sum_of_terms();
  return report;
}

BoundReport best_bound(const DecompositionGraph& g, const SearchLimits& limits,
                       const LabelingObserver& observer) {
  require_valid(g);
  if (special_edges(g).empty()) return bound_regular(g);
  if (capital_phi(g) == 0) return bound_tree(g, limits, observer);
  return bound_general(g, limits, observer);
}

BoundReport bound_with(Theorem t, const DecompositionGraph& g, const SearchLimits& limits,
                       const LabelingObserver& observer) {
  switch (t) {
    case Theorem::regular: return bound_regular(g);
    case Theorem::tree: return bound_tree(g, limits, observer);
    case Theorem::general: return bound_general(g, limits, observer);
  }
  throw DomainError("unknown theorem");
}

std::int64_t evaluate_witness(const DecompositionGraph& g, const Witness& w) {
  std::map<std::string, Psi> psi(w.psi.begin(), w.psi.end());
  std::map<std::string, PsiPrime> prime(w.psi_prime.begin(), w.psi_prime.end());
  std::vector<std::int64_t> plus(g.vertex_count(), 0), minus(g.vertex_count(), 0);
  auto add_inc = [&](std::size_t j, const EndIncrements& e) {
    plus[g.source(j)] += e.source_plus;
    minus[g.source(j)] += e.source_minus;
    plus[g.target(j)] += e.target_plus;
    minus[g.target(j)] += e.target_minus;
  };
  std::size_t used_psi = 0, used_prime = 0;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (!g.is_special(j)) continue;
    const std::string& id = g.edges()[j].id;
    const bool in_tree = std::find(w.tree.begin(), w.tree.end(), id) != w.tree.end();
    if (in_tree) {
      auto it = psi.find(id);
      if (it == psi.end()) throw DomainError("witness has no psi label for tree edge " + id);
      add_inc(j, increments(it->second));
      ++used_psi;
    } else {
      auto it = prime.find(id);
      if (it == prime.end()) throw DomainError("witness has no psi' label for edge " + id);
      add_inc(j, increments(it->second));
      ++used_prime;
    }
  }
  if (used_psi != psi.size() || used_prime != prime.size())
    throw DomainError("witness labels edges outside their domain");

  const auto stats = degree_stats(g);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const SeifertData& s = g.vertices()[i].data;
    const std::int64_t h = handle_count(s);
    const std::int64_t m = 1 - s.r() - h - stats[i].d_minus - minus[i];
    const std::int64_t M = h + stats[i].d_plus + plus[i] - 1;
    total = add(total, f(m, M, s.b));
  }
  return total;
}

}  // namespace gmc
