#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include <json.hpp>

#include "gmc/bounds.hpp"
#include "gmc/errors.hpp"
#include "gmc/json_io.hpp"
#include "test_support.hpp"

using namespace gmc;
using gmc::testing::load_fixture;

namespace {

void rejects(const std::string& text, const std::string& fragment) {
  CAPTURE(text);
  CHECK_THROWS_WITH_AS(parse_graph(text), doctest::Contains(fragment.c_str()), ParseError);
}

const std::string kEdge = R"({"id":"e","from":"v","to":"v","matrix":[[1,2],[1,1]]})";

std::string with_vertex(const std::string& vertex) {
  return R"({"vertices":[)" + vertex + R"(],"edges":[)" + kEdge + "]}";
}

}  // namespace

TEST_CASE("every fixture round-trips") {
  for (const auto& entry : std::filesystem::directory_iterator(GMC_FIXTURE_DIR)) {
    const auto name = entry.path().filename().string();
    if (name == "malformed.json") continue;
    CAPTURE(name);
    const auto g = load_fixture(name);
    const auto text = serialize_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(serialize_graph(parse_graph(text)) == text);
  }
}

TEST_CASE("random graphs round-trip") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = gmc::testing::random_graph(rng, {});
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("serialization is canonical") {
  const auto g = parse_graph(
      R"({"edges":[{"matrix":[[1,2],[1,1]],"to":"a","from":"b","id":"e"}],)"
      R"("vertices":[{"b":0,"fibres":[],"g":1,"id":"b"},{"id":"a","g":0,"fibres":[[2,1],[3,1]],"b":-1}]})");
  CHECK(serialize_graph(g) ==
        "{\n"
        "  \"vertices\": [\n"
        "    {\n      \"id\": \"a\",\n      \"g\": 0,\n      \"fibres\": [\n        [\n          2,\n          1\n"
        "        ],\n        [\n          3,\n          1\n        ]\n      ],\n      \"b\": -1\n    },\n"
        "    {\n      \"id\": \"b\",\n      \"g\": 1,\n      \"fibres\": [],\n      \"b\": 0\n    }\n"
        "  ],\n"
        "  \"edges\": [\n"
        "    {\n      \"id\": \"e\",\n      \"from\": \"b\",\n      \"to\": \"a\",\n      \"matrix\": [\n"
        "        [\n          1,\n          2\n        ],\n        [\n          1,\n          1\n        ]\n      ]\n    }\n"
        "  ]\n"
        "}\n");
}

TEST_CASE("malformed documents are parse errors") {
  CHECK_THROWS_AS(parse_graph(gmc::testing::read_file(gmc::testing::fixture_path("malformed.json"))), ParseError);
  rejects("[", "malformed JSON");
  rejects("[]", "must be an object");
  rejects(R"({"vertices":[]})", "missing key 'edges'");
  rejects(R"({"vertices":[],"edges":[],"extra":1})", "unknown key 'extra'");
  rejects(with_vertex(R"({"id":"v","g":0,"fibres":[],"b":0.5})"), "expected an integer literal");
  rejects(with_vertex(R"({"id":"v","g":0,"fibres":[],"b":1e3})"), "expected an integer literal");
  rejects(with_vertex(R"({"id":"v","g":0,"fibres":[],"b":"0"})"), "expected an integer literal");
  rejects(with_vertex(R"({"id":"v","g":0,"fibres":[],"b":9223372036854775808})"), "out of range");
  rejects(with_vertex(R"({"id":"","g":0,"fibres":[],"b":0})"), "must be non-empty");
  rejects(with_vertex(R"({"id":"v","g":0,"fibres":[[2]],"b":0})"), "pair of integers");
  rejects(with_vertex(R"({"id":"v","g":0,"fibres":[],"b":0,"colour":1})"), "unknown key 'colour'");
  rejects(with_vertex(R"({"id":"w","g":0,"fibres":[],"b":0})"), "unknown vertex");
  rejects(R"({"vertices":[{"id":"v","g":0,"fibres":[],"b":0},{"id":"v","g":0,"fibres":[],"b":0}],"edges":[]})",
          "duplicate vertex id");
  rejects(R"({"vertices":[{"id":"v","g":0,"fibres":[],"b":0}],"edges":[{"id":"e","from":"v","to":"v","matrix":[[1,2]]}]})",
          "matrix");
}

TEST_CASE("extreme integers survive parsing") {
  const auto g = parse_graph(with_vertex(R"({"id":"v","g":0,"fibres":[],"b":-9223372036854775808})"));
  CHECK(g.vertices()[0].data.b == std::numeric_limits<std::int64_t>::min());
}

TEST_CASE("reports serialize in fixed term order") {
  const auto r = bound_general(load_fixture("parallel_h.json"));
  const auto doc = nlohmann::json::parse(report_to_json(r));
  CHECK(doc["theorem"] == "general");
  CHECK(doc["total"] == 12);
  CHECK(doc["terms"]["cycle"] == 5);
  CHECK(doc["terms"]["phi"] == 1);
  CHECK(doc["terms"]["vertices"][0]["id"] == "v1");
  CHECK(doc["witness"]["tree"] == nlohmann::json::array({"e1"}));
  CHECK(doc["witness"]["psi"]["e1"] == "+");
  CHECK(doc["witness"]["psi_prime"]["e2"] == "++");
  CHECK(report_to_json(r) == report_to_json(bound_general(load_fixture("parallel_h.json"))));
}
