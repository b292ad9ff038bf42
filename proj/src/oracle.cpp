#include "gmc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gmc/checked.hpp"
#include "gmc/errors.hpp"
#include "gmc/farey.hpp"

namespace gmc::oracle {

std::int64_t subtractive_cf_sum(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1) throw DomainError("subtractive_cf_sum needs coprime positives");
  std::int64_t steps = 0;
  while (q != 0) {
    if (p >= q) {
      p -= q;
      ++steps;
    } else {
      std::swap(p, q);
    }
  }
  return steps;
}

namespace {

bool plus_minus_h(const Gl2Matrix& a) {
  return (a.alpha == 0 && a.delta == 0 && a.beta == a.gamma && (a.beta == 1 || a.beta == -1));
}

// Acyclic with |V|-1 edges, checked by repeated reachability.
bool spans(const DecompositionGraph& g, const std::vector<std::size_t>& subset) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t j : subset) {
    std::size_t a = g.source(j), b = g.target(j);
    if (a == b) return false;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;  // connected with n-1 edges, hence a tree
}

std::int64_t count_phi(const DecompositionGraph& g, const SpanningTree& t) {
  std::int64_t c = 0;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (!plus_minus_h(g.edges()[j].matrix)) continue;
    if (std::find(t.edges.begin(), t.edges.end(), j) == t.edges.end()) ++c;
  }
  return c;
}

}  // namespace

std::vector<SpanningTree> all_spanning_trees(const DecompositionGraph& g, std::uint64_t max_trees) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::vector<SpanningTree> out;
  if (n == 0) return out;
  const std::size_t k = n - 1;
  if (k > m) return out;
  if (k == 0) return {SpanningTree{}};

  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (spans(g, idx)) {
      if (out.size() >= max_trees)
        throw CapExceededError("spanning tree enumeration exceeds the cap of " + std::to_string(max_trees),
                               max_trees + 1);
      out.push_back(SpanningTree{idx});
    }
    // next k-combination of {0..m-1} in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return out;
}

std::int64_t bruteforce_phi(const DecompositionGraph& g, std::uint64_t max_trees) {
  const auto trees = all_spanning_trees(g, max_trees);
  if (trees.empty()) throw DomainError("graph has no spanning tree");
  std::int64_t best = count_phi(g, trees.front());
  for (const auto& t : trees) best = std::min(best, count_phi(g, t));
  return best;
}

namespace {

enum class Sign { plus, minus };
// Six labels, same order as PsiPrime.
enum class Pair { pp, p, pm, mp, m, mm };

struct Labelling {
  std::vector<std::size_t> tree_h;      // J'_T
  std::vector<std::size_t> nontree_h;   // J' \ J'_T
  std::vector<Sign> psi;
  std::vector<Pair> psi_prime;
};

// Literal transcription of the degree counts and the window of f.
std::int64_t sum_f(const DecompositionGraph& g, const Labelling& L) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    std::int64_t d_plus = 0, d_minus = 0;
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
      if (plus_minus_h(g.edges()[j].matrix)) continue;
      if (g.source(j) == i) ++d_plus;
      if (g.target(j) == i) ++d_minus;
    }
    std::int64_t dp_psi = 0, dm_psi = 0;
    for (std::size_t k = 0; k < L.tree_h.size(); ++k) {
      const std::size_t j = L.tree_h[k];
      const std::int64_t ends = (g.source(j) == i) + (g.target(j) == i);
      (L.psi[k] == Sign::plus ? dp_psi : dm_psi) += ends;
    }
    std::int64_t dp_prime = 0, dm_prime = 0;
    for (std::size_t k = 0; k < L.nontree_h.size(); ++k) {
      const std::size_t j = L.nontree_h[k];
      const bool src = g.source(j) == i;
      const bool tgt = g.target(j) == i;
      switch (L.psi_prime[k]) {
        case Pair::pp: dp_prime += 2 * src + tgt; break;
        case Pair::p: dp_prime += src + 2 * tgt; break;
        case Pair::pm:
          dp_prime += src;
          dm_prime += tgt;
          break;
        case Pair::mp:
          dm_prime += src;
          dp_prime += tgt;
          break;
        case Pair::m: dm_prime += src + 2 * tgt; break;
        case Pair::mm: dm_prime += 2 * src + tgt; break;
      }
    }
    const SeifertData& s = g.vertices()[i].data;
    const std::int64_t h = s.g >= 0 ? 2 * s.g : -s.g;
    const std::int64_t r = static_cast<std::int64_t>(s.fibres.size());
    const std::int64_t m = -r - h - d_minus - dm_psi - dm_prime + 1;
    const std::int64_t M = h + d_plus + dp_psi + dp_prime - 1;
    total += f(m, M, s.b);
  }
  return total;
}

// Lexicographic minimum over all labellings for one tree split.
void search(const DecompositionGraph& g, Labelling L, const SearchLimits& limits,
            const std::vector<std::string>& tree_ids, MinF& best, bool& have) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < L.tree_h.size(); ++k) total = checked::sat_mul(total, 2);
  for (std::size_t k = 0; k < L.nontree_h.size(); ++k) total = checked::sat_mul(total, 6);
  if (total > limits.max_assignments)
    throw CapExceededError("oracle labelling search needs " + std::to_string(total) + " assignments",
                           total);
  L.psi.assign(L.tree_h.size(), Sign::plus);
  L.psi_prime.assign(L.nontree_h.size(), Pair::pp);
  for (std::uint64_t code = 0; code < total; ++code) {
    // decode, most significant digit first
    std::uint64_t rest = code;
    for (std::size_t k = L.nontree_h.size(); k-- > 0;) {
      L.psi_prime[k] = static_cast<Pair>(rest % 6);
      rest /= 6;
    }
    for (std::size_t k = L.tree_h.size(); k-- > 0;) {
      L.psi[k] = (rest % 2 == 0) ? Sign::plus : Sign::minus;
      rest /= 2;
    }
    ++best.labelings;
    const std::int64_t value = sum_f(g, L);
    if (!have || value < best.value) {
      have = true;
      best.value = value;
      best.witness.tree = tree_ids;
      best.witness.psi.clear();
      best.witness.psi_prime.clear();
      for (std::size_t k = 0; k < L.tree_h.size(); ++k)
        best.witness.psi.emplace_back(g.edges()[L.tree_h[k]].id,
                                      L.psi[k] == Sign::plus ? Psi::plus : Psi::minus);
      for (std::size_t k = 0; k < L.nontree_h.size(); ++k)
        best.witness.psi_prime.emplace_back(g.edges()[L.nontree_h[k]].id,
                                            static_cast<PsiPrime>(L.psi_prime[k]));
    }
  }
}

}  // namespace

MinF bruteforce_min_f(const DecompositionGraph& g, Theorem theorem, const SearchLimits& limits) {
  const auto trees = all_spanning_trees(g, limits.max_trees);
  if (trees.empty()) throw DomainError("graph has no spanning tree");
  std::vector<std::int64_t> phis;
  for (const auto& t : trees) phis.push_back(count_phi(g, t));
  const std::int64_t min_phi = *std::min_element(phis.begin(), phis.end());

  std::vector<std::size_t> all_h;
  for (std::size_t j = 0; j < g.edge_count(); ++j)
    if (plus_minus_h(g.edges()[j].matrix)) all_h.push_back(j);

  MinF best;
  bool have = false;
  switch (theorem) {
    case Theorem::regular: {
      if (!all_h.empty()) throw InapplicableError("regular theorem needs no +-H edge");
      search(g, Labelling{}, limits, {}, best, have);
      break;
    }
    case Theorem::tree: {
      if (min_phi != 0) throw InapplicableError("tree theorem needs Phi(G) = 0");
      std::vector<std::string> ids;
      for (std::size_t k = 0; k < trees.size(); ++k)
        if (phis[k] == 0) {
          for (std::size_t j : trees[k].edges) ids.push_back(g.edges()[j].id);
          break;
        }
      Labelling L;
      L.tree_h = all_h;
      search(g, L, limits, ids, best, have);
      break;
    }
    case Theorem::general: {
      for (std::size_t k = 0; k < trees.size(); ++k) {
        if (phis[k] != min_phi) continue;
        Labelling L;
        std::vector<std::string> ids;
        for (std::size_t j : trees[k].edges) ids.push_back(g.edges()[j].id);
        for (std::size_t j : all_h) {
          const bool in_tree = std::find(trees[k].edges.begin(), trees[k].edges.end(), j) != trees[k].edges.end();
          (in_tree ? L.tree_h : L.nontree_h).push_back(j);
        }
        search(g, L, limits, ids, best, have);
      }
      break;
    }
  }
  return best;
}

OracleBound bruteforce_bound(const DecompositionGraph& g, Theorem theorem, const SearchLimits& limits) {
  OracleBound out;
  out.theorem = theorem;
  out.min_f = bruteforce_min_f(g, theorem, limits);
  out.phi = bruteforce_phi(g, limits.max_trees);

  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto e = static_cast<std::int64_t>(g.edge_count());
  std::int64_t total = 5 * (e - n + 1);
  if (theorem == Theorem::general) total += out.phi;
  for (const Edge& edge : g.edges())
    if (!plus_minus_h(edge.matrix)) total += complexity_by_search(edge.matrix);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const SeifertData& s = g.vertices()[i].data;
    std::int64_t d = 0;
    for (std::size_t j = 0; j < g.edge_count(); ++j) d += (g.source(j) == i) + (g.target(j) == i);
    const std::int64_t h = s.g >= 0 ? 2 * s.g : -s.g;
    total += 3 * (d + static_cast<std::int64_t>(s.fibres.size()) + 2 * h - 2);
    for (const Fibre& fb : s.fibres) total += subtractive_cf_sum(fb.p, fb.q) - 2;
  }
  out.total = total + out.min_f.value;
  return out;
}

LemmaReport verify_lemma(std::int64_t beta_max) {
  if (beta_max < 2) throw DomainError("verify_lemma needs beta_max >= 2");
  LemmaReport rep;
  rep.beta_max = beta_max;
  const FareyTriangle plus = tau_plus();
  const FareyTriangle minus = tau_minus();

  auto record = [&](const Gl2Matrix& a, const std::string& what) {
    std::ostringstream os;
    os << a << ": " << what;
    rep.counterexamples.push_back(os.str());
  };

  for (const Gl2Matrix& a : {kH, -kH}) {
    ++rep.matrices;
    if (matrix_complexity(a) != 0) record(a, "closed form is not 0");
    if (complexity_by_search(a) != 0) record(a, "search complexity is not 0");
    if (farey_distance(act(a, minus), minus) != 0 || farey_distance(act(a, plus), plus) != 0)
      record(a, "+-H does not fix tau_- and tau_+");
  }

  for (std::int64_t abs_beta = 2; abs_beta <= beta_max; ++abs_beta) {
    for (std::int64_t eps : {1, -1}) {
      const std::int64_t beta = eps * abs_beta;
      // eps*alpha and eps*delta both range over [0, |beta|).
      for (std::int64_t ea = 0; ea < abs_beta; ++ea) {
        for (std::int64_t ed = 0; ed < abs_beta; ++ed) {
          const std::int64_t alpha = eps * ea, delta = eps * ed;
          const std::int64_t num = alpha * delta + 1;  // beta*gamma = alpha*delta + 1
          if (num % beta != 0) continue;
          const Gl2Matrix a{alpha, beta, num / beta, delta};
          ++rep.matrices;
          const std::int64_t closed = matrix_complexity(a);
          const std::int64_t searched = complexity_by_search(a);
          if (closed != searched)
            record(a, "closed form " + std::to_string(closed) + " != search " + std::to_string(searched));
          const std::int64_t d_minus_plus = farey_distance(act(a, minus), plus);
          if (d_minus_plus != searched)
            record(a, "d(A tau_-, tau_+) = " + std::to_string(d_minus_plus) + " is not the minimum " +
                          std::to_string(searched));
        }
      }
    }
  }
  return rep;
}

std::string format_lemma_report(const LemmaReport& r) {
  std::ostringstream os;
  os << "checked " << r.matrices << " normalized matrices with |beta| <= " << r.beta_max << "\n";
  if (r.ok()) {
    os << "verified: closed form = Farey search on every matrix\n";
  } else {
    os << r.counterexamples.size() << " counterexample(s):\n";
    for (const auto& c : r.counterexamples) os << "  " << c << "\n";
  }
  return os.str();
}

}  // namespace gmc::oracle
