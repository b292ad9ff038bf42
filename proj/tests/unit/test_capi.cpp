#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "gmc/gmc.h"

namespace {

std::string fixture(const char* name) { return std::string(GMC_FIXTURE_DIR) + "/" + name; }

gmc_graph* load(const char* name) {
  gmc_graph* g = nullptr;
  REQUIRE(gmc_graph_load(fixture(name).c_str(), &g) == GMC_OK);
  return g;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  gmc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("loading and inspecting graphs") {
  gmc_graph* g = load("mixed_general.json");
  CHECK(gmc_graph_vertex_count(g) == 3);
  CHECK(gmc_graph_edge_count(g) == 5);

  char* text = nullptr;
  REQUIRE(gmc_graph_serialize(g, &text) == GMC_OK);
  const std::string doc = take(text);
  gmc_graph* again = nullptr;
  REQUIRE(gmc_graph_parse(doc.data(), doc.size(), &again) == GMC_OK);
  CHECK(gmc_graph_equal(g, again) == 1);
  gmc_graph_free(again);
  gmc_graph_free(g);
}

TEST_CASE("errors carry status codes and messages") {
  gmc_graph* g = nullptr;
  CHECK(gmc_graph_load(fixture("malformed.json").c_str(), &g) == GMC_PARSE_ERROR);
  CHECK(g == nullptr);
  CHECK(std::string(gmc_last_error()).find("malformed JSON") != std::string::npos);
  CHECK(gmc_graph_load(fixture("missing.json").c_str(), &g) == GMC_PARSE_ERROR);
  CHECK(gmc_graph_parse(nullptr, 0, &g) == GMC_BAD_ARGUMENT);
  CHECK(gmc_bound(nullptr, nullptr, nullptr) == GMC_BAD_ARGUMENT);
  CHECK(std::string(gmc_status_name(GMC_CAP_EXCEEDED)) == "cap exceeded");
  gmc_graph_free(nullptr);
  gmc_report_free(nullptr);
}

TEST_CASE("validation through the C API") {
  gmc_graph* ok = load("regular_pair.json");
  char* report = nullptr;
  CHECK(gmc_graph_validate(ok, &report) == GMC_OK);
  CHECK(take(report) == "ok\n");

  gmc_graph* bad = load("violates_ii_a.json");
  CHECK(gmc_graph_validate(bad, &report) == GMC_INVALID);
  CHECK(take(report).find("[(ii)(a)] edge e1") != std::string::npos);

  gmc_report* r = nullptr;
  CHECK(gmc_bound(bad, nullptr, &r) == GMC_INVALID);
  CHECK(r == nullptr);
  gmc_graph_free(ok);
  gmc_graph_free(bad);
}

TEST_CASE("bounds through the C API") {
  struct Case {
    const char* file;
    int64_t total;
    gmc_theorem theorem;
  };
  for (const Case& c : {Case{"regular_pair.json", 8, GMC_THEOREM_REGULAR}, Case{"regular_loop.json", 9, GMC_THEOREM_REGULAR},
                        Case{"h_edge.json", 7, GMC_THEOREM_TREE}, Case{"parallel_h.json", 12, GMC_THEOREM_GENERAL}}) {
    CAPTURE(c.file);
    gmc_graph* g = load(c.file);
    gmc_report* r = nullptr;
    REQUIRE(gmc_bound(g, nullptr, &r) == GMC_OK);
    CHECK(gmc_report_total(r) == c.total);
    CHECK(gmc_report_theorem(r) == c.theorem);
    char* json = nullptr;
    REQUIRE(gmc_report_to_json(r, &json) == GMC_OK);
    CHECK(take(json).find("\"total\": " + std::to_string(c.total)) != std::string::npos);
    gmc_report_free(r);
    gmc_graph_free(g);
  }
  CHECK(std::string(gmc_theorem_name(GMC_THEOREM_TREE)) == "tree");
}

TEST_CASE("theorem selection and caps") {
  gmc_graph* g = load("parallel_h.json");
  gmc_bound_options opts;
  gmc_bound_options_init(&opts);
  CHECK(opts.max_assignments == (uint64_t{1} << 20));
  gmc_report* r = nullptr;
  opts.theorem = GMC_THEOREM_TREE;
  CHECK(gmc_bound(g, &opts, &r) == GMC_INAPPLICABLE);
  opts.theorem = GMC_THEOREM_GENERAL;
  opts.max_assignments = 2;
  CHECK(gmc_bound(g, &opts, &r) == GMC_CAP_EXCEEDED);
  CHECK(std::string(gmc_last_error()).find("24") != std::string::npos);
  opts.max_assignments = 0;
  CHECK(gmc_bound(g, &opts, &r) == GMC_BAD_ARGUMENT);
  gmc_graph_free(g);
}

TEST_CASE("normalization through the C API") {
  gmc_graph* raw = load("unnormalized.json");
  gmc_graph* fixed = nullptr;
  char* moves = nullptr;
  REQUIRE(gmc_graph_normalize(raw, &fixed, &moves) == GMC_OK);
  CHECK(take(moves) == "edge e1: A -> U^0 A U^-1; b[v1] += -1, b[v2] -= 0\n");
  char* report = nullptr;
  CHECK(gmc_graph_validate(fixed, &report) == GMC_OK);
  gmc_string_free(report);
  gmc_graph_free(fixed);
  gmc_graph_free(raw);
}

TEST_CASE("oracle entry points") {
  char* report = nullptr;
  CHECK(gmc_oracle_lemma(6, &report) == GMC_OK);
  CHECK(take(report).find("verified") != std::string::npos);

  gmc_graph* g = load("parallel_h.json");
  CHECK(gmc_oracle_phi(g, 1000, &report) == GMC_OK);
  CHECK(take(report) == "Φ = 1 (greedy = brute force)\n");
  CHECK(gmc_oracle_minf(g, nullptr, &report) == GMC_OK);
  const std::string minf = take(report);
  CHECK(minf.find("theorem general") != std::string::npos);
  CHECK(minf.find("min Σf = 0") != std::string::npos);
  CHECK(minf.find("bound = 12 (search = brute force)") != std::string::npos);
  gmc_graph_free(g);
}
