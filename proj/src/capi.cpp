#include "gmc/gmc.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "gmc/bounds.hpp"
#include "gmc/decomp_graph.hpp"
#include "gmc/errors.hpp"
#include "gmc/json_io.hpp"
#include "gmc/oracle.hpp"
#include "gmc/spanning.hpp"

struct gmc_graph {
  gmc::DecompositionGraph graph;
};

struct gmc_report {
  gmc::BoundReport report;
};

namespace {

thread_local std::string last_error;

gmc_status fail(gmc_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating library exceptions into status codes.
template <typename Body>
gmc_status guarded(Body&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const gmc::ParseError& e) {
    return fail(GMC_PARSE_ERROR, e.what());
  } catch (const gmc::CapExceededError& e) {
    return fail(GMC_CAP_EXCEEDED, e.what());
  } catch (const gmc::InapplicableError& e) {
    return fail(GMC_INAPPLICABLE, e.what());
  } catch (const gmc::OverflowError& e) {
    return fail(GMC_OVERFLOW, e.what());
  } catch (const gmc::DomainError& e) {
    return fail(GMC_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GMC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GMC_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = duplicate(s);
}

gmc::SearchLimits limits_from(const gmc_bound_options* options) {
  gmc::SearchLimits limits;
  if (options) {
    limits.max_trees = options->max_trees;
    limits.max_assignments = options->max_assignments;
  }
  return limits;
}

bool theorem_from(gmc_theorem t, gmc::Theorem& out) {
  switch (t) {
    case GMC_THEOREM_REGULAR: out = gmc::Theorem::regular; return true;
    case GMC_THEOREM_TREE: out = gmc::Theorem::tree; return true;
    case GMC_THEOREM_GENERAL: out = gmc::Theorem::general; return true;
    default: return false;
  }
}

gmc_theorem theorem_to(gmc::Theorem t) {
  switch (t) {
    case gmc::Theorem::regular: return GMC_THEOREM_REGULAR;
    case gmc::Theorem::tree: return GMC_THEOREM_TREE;
    case gmc::Theorem::general: return GMC_THEOREM_GENERAL;
  }
  return GMC_THEOREM_AUTO;
}

gmc_status require_valid(const gmc::DecompositionGraph& g) {
  const auto r = gmc::validate(g);
  if (r.ok()) return GMC_OK;
  return fail(GMC_INVALID, gmc::format_validation(r));
}

}  // namespace

extern "C" {

const char* gmc_last_error(void) { return last_error.c_str(); }

const char* gmc_status_name(gmc_status status) {
  switch (status) {
    case GMC_OK: return "ok";
    case GMC_INVALID: return "invalid";
    case GMC_PARSE_ERROR: return "parse error";
    case GMC_CAP_EXCEEDED: return "cap exceeded";
    case GMC_ORACLE_MISMATCH: return "oracle mismatch";
    case GMC_INAPPLICABLE: return "inapplicable";
    case GMC_BAD_ARGUMENT: return "bad argument";
    case GMC_OVERFLOW: return "overflow";
    case GMC_INTERNAL: return "internal error";
  }
  return "unknown";
}

void gmc_string_free(char* s) { std::free(s); }

gmc_status gmc_graph_parse(const char* text, size_t length, gmc_graph** out) {
  if (!text || !out) return fail(GMC_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new gmc_graph{gmc::parse_graph(std::string_view(text, length))};
    return GMC_OK;
  });
}

gmc_status gmc_graph_load(const char* path, gmc_graph** out) {
  if (!path || !out) return fail(GMC_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail(GMC_PARSE_ERROR, std::string("cannot open ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    *out = new gmc_graph{gmc::parse_graph(text)};
    return GMC_OK;
  });
}

void gmc_graph_free(gmc_graph* graph) { delete graph; }

size_t gmc_graph_vertex_count(const gmc_graph* graph) { return graph ? graph->graph.vertex_count() : 0; }

size_t gmc_graph_edge_count(const gmc_graph* graph) { return graph ? graph->graph.edge_count() : 0; }

int gmc_graph_equal(const gmc_graph* a, const gmc_graph* b) {
  if (!a || !b) return 0;
  return a->graph == b->graph ? 1 : 0;
}

gmc_status gmc_graph_serialize(const gmc_graph* graph, char** out) {
  if (!graph || !out) return fail(GMC_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    put(out, gmc::serialize_graph(graph->graph));
    return GMC_OK;
  });
}

gmc_status gmc_graph_validate(const gmc_graph* graph, char** report) {
  if (!graph) return fail(GMC_BAD_ARGUMENT, "null graph");
  return guarded([&] {
    const auto r = gmc::validate(graph->graph);
    put(report, gmc::format_validation(r));
    if (r.ok()) return GMC_OK;
    return fail(GMC_INVALID, "graph failed validation");
  });
}

gmc_status gmc_graph_normalize(const gmc_graph* graph, gmc_graph** out, char** moves) {
  if (!graph || !out) return fail(GMC_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    gmc::GraphNormalization n = gmc::normalize_all(graph->graph);
    std::ostringstream log;
    for (const auto& m : n.moves) {
      const gmc::Edge& e = graph->graph.edges()[graph->graph.edge_index(m.edge)];
      log << "edge " << m.edge << ": A -> U^" << m.h << " A U^" << m.k << "; b[" << e.from
          << "] += " << m.k << ", b[" << e.to << "] -= " << m.h << "\n";
    }
    put(moves, log.str());
    *out = new gmc_graph{std::move(n.graph)};
    return GMC_OK;
  });
}

void gmc_bound_options_init(gmc_bound_options* options) {
  if (!options) return;
  const gmc::SearchLimits defaults;
  options->theorem = GMC_THEOREM_AUTO;
  options->max_trees = defaults.max_trees;
  options->max_assignments = defaults.max_assignments;
}

gmc_status gmc_bound(const gmc_graph* graph, const gmc_bound_options* options, gmc_report** out) {
  if (!graph || !out) return fail(GMC_BAD_ARGUMENT, "null argument");
  gmc_bound_options opts;
  gmc_bound_options_init(&opts);
  if (options) opts = *options;
  if (opts.max_trees == 0 || opts.max_assignments == 0) return fail(GMC_BAD_ARGUMENT, "caps must be positive");
  return guarded([&] {
    if (gmc_status s = require_valid(graph->graph); s != GMC_OK) return s;
    const gmc::SearchLimits limits = limits_from(&opts);
    gmc::Theorem t;
    if (opts.theorem == GMC_THEOREM_AUTO) {
      *out = new gmc_report{gmc::best_bound(graph->graph, limits)};
    } else if (theorem_from(opts.theorem, t)) {
      *out = new gmc_report{gmc::bound_with(t, graph->graph, limits)};
    } else {
      return fail(GMC_BAD_ARGUMENT, "unknown theorem selector");
    }
    return GMC_OK;
  });
}

void gmc_report_free(gmc_report* report) { delete report; }

int64_t gmc_report_total(const gmc_report* report) { return report ? report->report.total : -1; }

gmc_theorem gmc_report_theorem(const gmc_report* report) {
  return report ? theorem_to(report->report.theorem) : GMC_THEOREM_AUTO;
}

const char* gmc_theorem_name(gmc_theorem theorem) {
  switch (theorem) {
    case GMC_THEOREM_AUTO: return "auto";
    case GMC_THEOREM_REGULAR: return "regular";
    case GMC_THEOREM_TREE: return "tree";
    case GMC_THEOREM_GENERAL: return "general";
  }
  return "unknown";
}

gmc_status gmc_report_to_json(const gmc_report* report, char** out) {
  if (!report || !out) return fail(GMC_BAD_ARGUMENT, "null argument");
  return guarded([&] {
    put(out, gmc::report_to_json(report->report));
    return GMC_OK;
  });
}

gmc_status gmc_oracle_lemma(int64_t beta_max, char** report) {
  if (beta_max < 2) return fail(GMC_BAD_ARGUMENT, "beta_max must be at least 2");
  return guarded([&] {
    const auto r = gmc::oracle::verify_lemma(beta_max);
    put(report, gmc::oracle::format_lemma_report(r));
    if (r.ok()) return GMC_OK;
    return fail(GMC_ORACLE_MISMATCH, "lemma counterexample found");
  });
}

gmc_status gmc_oracle_phi(const gmc_graph* graph, uint64_t max_trees, char** report) {
  if (!graph) return fail(GMC_BAD_ARGUMENT, "null graph");
  return guarded([&] {
    const std::int64_t greedy = gmc::capital_phi(graph->graph);
    const std::int64_t brute = gmc::oracle::bruteforce_phi(graph->graph, max_trees);
    std::ostringstream os;
    if (greedy == brute) {
      os << "Φ = " << greedy << " (greedy = brute force)\n";
      put(report, os.str());
      return GMC_OK;
    }
    os << "Φ mismatch: greedy = " << greedy << ", brute force = " << brute << "\n";
    put(report, os.str());
    return fail(GMC_ORACLE_MISMATCH, "greedy and brute-force Φ disagree");
  });
}

gmc_status gmc_oracle_minf(const gmc_graph* graph, const gmc_bound_options* options, char** report) {
  if (!graph) return fail(GMC_BAD_ARGUMENT, "null graph");
  gmc_bound_options opts;
  gmc_bound_options_init(&opts);
  if (options) opts = *options;
  if (opts.max_trees == 0 || opts.max_assignments == 0) return fail(GMC_BAD_ARGUMENT, "caps must be positive");
  return guarded([&] {
    if (gmc_status s = require_valid(graph->graph); s != GMC_OK) return s;
    const gmc::SearchLimits limits = limits_from(&opts);
    gmc::BoundReport prod;
    if (opts.theorem == GMC_THEOREM_AUTO) {
      prod = gmc::best_bound(graph->graph, limits);
    } else {
      gmc::Theorem t;
      if (!theorem_from(opts.theorem, t)) return fail(GMC_BAD_ARGUMENT, "unknown theorem selector");
      prod = gmc::bound_with(t, graph->graph, limits);
    }
    std::int64_t prod_min = 0;
    for (const auto& v : prod.vertex_terms) prod_min += v.f;
    const auto brute = gmc::oracle::bruteforce_bound(graph->graph, prod.theorem, limits);

    std::ostringstream os;
    os << "theorem " << gmc::theorem_name(prod.theorem) << "\n";
    const bool agree = prod_min == brute.min_f.value && prod.total == brute.total;
    if (agree) {
      os << "min Σf = " << prod_min << "\n";
      os << "bound = " << prod.total << " (search = brute force)\n";
      put(report, os.str());
      return GMC_OK;
    }
    os << "mismatch: search min Σf = " << prod_min << ", brute force min Σf = " << brute.min_f.value
       << "; search bound = " << prod.total << ", brute force bound = " << brute.total << "\n";
    put(report, os.str());
    return fail(GMC_ORACLE_MISMATCH, "search and brute force disagree");
  });
}

}  // extern "C"
