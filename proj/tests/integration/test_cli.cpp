#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string fixture(const std::string& name) { return std::string(GMC_FIXTURE_DIR) + "/" + name; }

// Runs the CLI through the shell; stderr is discarded unless `merge` is set.
Run gmc(const std::string& args, bool merge = false, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + GMC_CLI + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("validate exit codes") {
  auto ok = gmc("validate " + fixture("regular_pair.json"));
  CHECK(ok.status == 0);
  CHECK(ok.out == "ok\n");

  auto bad = gmc("validate " + fixture("violates_ii_a.json"));
  CHECK(bad.status == 1);
  CHECK(contains(bad.out, "(ii)(a)"));

  CHECK(gmc("validate " + fixture("malformed.json")).status == 2);
  CHECK(gmc("validate " + fixture("does_not_exist.json")).status == 2);
}

TEST_CASE("bound output and theorem tags") {
  auto regular = gmc("bound --theorem regular " + fixture("regular_pair.json"));
  CHECK(regular.status == 0);
  CHECK(regular.out == "8 (regular)\n");

  auto general = gmc("bound " + fixture("parallel_h.json"));
  CHECK(general.status == 0);
  CHECK(general.out == "12 (general)\n");

  auto tree = gmc("bound --theorem auto " + fixture("h_edge.json"));
  CHECK(tree.status == 0);
  CHECK(tree.out == "7 (tree)\n");

  CHECK(gmc("bound " + fixture("regular_loop.json")).out == "9 (regular)\n");
  CHECK(gmc("bound --theorem general " + fixture("regular_pair.json")).out == "8 (general)\n");
}

TEST_CASE("bound failures") {
  auto inapplicable = gmc("bound --theorem tree " + fixture("parallel_h.json"), true);
  CHECK(inapplicable.status == 1);
  CHECK(contains(inapplicable.out, "inapplicable"));

  CHECK(gmc("bound --theorem regular " + fixture("h_edge.json")).status == 1);
  CHECK(gmc("bound " + fixture("violates_ii_a.json")).status == 1);
  CHECK(gmc("bound " + fixture("malformed.json")).status == 2);

  auto cap = gmc("bound --max-assignments 2 " + fixture("parallel_h.json"), true);
  CHECK(cap.status == 3);
  CHECK(contains(cap.out, "24"));
  CHECK(gmc("bound --max-trees 1 " + fixture("parallel_h.json")).status == 3);
  CHECK(gmc("bound " + fixture("parallel_h.json"), false, "MC_MAX_ASSIGNMENTS=2").status == 3);
  CHECK(gmc("bound --max-assignments 12 " + fixture("parallel_h.json"), false, "MC_MAX_ASSIGNMENTS=2").status == 0);
}

TEST_CASE("breakdown and normalize-first") {
  auto b = gmc("bound --breakdown " + fixture("parallel_h.json"));
  CHECK(b.status == 0);
  CHECK(b.out.rfind("12 (general)\n{", 0) == 0);
  CHECK(contains(b.out, "\"psi_prime\": {\n      \"e2\": \"++\""));

  CHECK(gmc("bound " + fixture("unnormalized.json")).status == 1);
  auto n = gmc("bound --normalize-first " + fixture("unnormalized.json"), true);
  CHECK(n.status == 0);
  CHECK(contains(n.out, "normalized edge e1: A -> U^0 A U^-1; b[v1] += -1, b[v2] -= 0"));
}

TEST_CASE("normalize writes a valid document") {
  const auto out = (std::filesystem::temp_directory_path() / "gmc_cli_normalized.json").string();
  CHECK(gmc("normalize -o '" + out + "' " + fixture("unnormalized.json")).status == 0);
  CHECK(gmc("validate '" + out + "'").status == 0);
  auto stdout_doc = gmc("normalize " + fixture("unnormalized.json"));
  std::ifstream in(out);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == stdout_doc.out);
  std::filesystem::remove(out);
}

TEST_CASE("oracle subcommands") {
  auto lemma = gmc("oracle lemma 30");
  CHECK(lemma.status == 0);
  CHECK(contains(lemma.out, "verified"));

  auto phi = gmc("oracle phi " + fixture("parallel_h.json"));
  CHECK(phi.status == 0);
  CHECK(phi.out == "Φ = 1 (greedy = brute force)\n");

  auto minf = gmc("oracle minf " + fixture("h_edge.json"));
  CHECK(minf.status == 0);
  CHECK(contains(minf.out, "min Σf = 1\n"));

  CHECK(gmc("oracle minf " + fixture("violates_ii_a.json")).status == 1);
  CHECK(gmc("oracle lemma 1").status != 0);
}

TEST_CASE("batch reports every file in order") {
  auto b = gmc("batch " + std::string(GMC_FIXTURE_DIR));
  CHECK(b.status == 2);
  CHECK(contains(b.out, "h_edge.json: 7 (tree)\n"));
  CHECK(contains(b.out, "parallel_h.json: 12 (general)\n"));
  CHECK(contains(b.out, "malformed.json: error 2: "));
  CHECK(b.out.find("h_edge.json") < b.out.find("regular_pair.json"));
  CHECK(gmc("batch " + std::string(GMC_FIXTURE_DIR)).out == b.out);
}

TEST_CASE("output is byte-identical across runs") {
  for (const char* f : {"mixed_general.json", "parallel_h.json", "h_edge.json"}) {
    const auto first = gmc("bound --breakdown " + fixture(f));
    const auto second = gmc("bound --breakdown " + fixture(f));
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
  }
}
