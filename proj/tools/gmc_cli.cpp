// Command-line front end. Talks to the library exclusively through gmc.h.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmc/gmc.h"

namespace {

namespace fs = std::filesystem;

// Exit codes of the tool.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitMismatch = 4;

int exit_code(gmc_status s) {
  switch (s) {
    case GMC_OK: return kExitOk;
    case GMC_PARSE_ERROR: return kExitParse;
    case GMC_CAP_EXCEEDED: return kExitCap;
    case GMC_ORACLE_MISMATCH: return kExitMismatch;
    default: return kExitInvalid;
  }
}

struct StringDeleter {
  void operator()(char* s) const { gmc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(gmc_graph* g) const { gmc_graph_free(g); }
};
using GraphPtr = std::unique_ptr<gmc_graph, GraphDeleter>;

struct ReportDeleter {
  void operator()(gmc_report* r) const { gmc_report_free(r); }
};
using ReportPtr = std::unique_ptr<gmc_report, ReportDeleter>;

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

struct BoundFlags {
  std::string theorem = "auto";
  bool breakdown = false;
  bool normalize_first = false;
  std::optional<std::uint64_t> max_trees;
  std::optional<std::uint64_t> max_assignments;
};

const std::map<std::string, gmc_theorem> kTheorems = {{"auto", GMC_THEOREM_AUTO},
                                                      {"regular", GMC_THEOREM_REGULAR},
                                                      {"tree", GMC_THEOREM_TREE},
                                                      {"general", GMC_THEOREM_GENERAL}};

gmc_bound_options options_from(const BoundFlags& flags) {
  gmc_bound_options opts;
  gmc_bound_options_init(&opts);
  if (const char* env = std::getenv("MC_MAX_ASSIGNMENTS"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) opts.max_assignments = v;
  }
  opts.theorem = kTheorems.at(flags.theorem);
  if (flags.max_trees) opts.max_trees = *flags.max_trees;
  if (flags.max_assignments) opts.max_assignments = *flags.max_assignments;
  return opts;
}

// Result of one command: what to print and the exit code.
struct Outcome {
  std::string out;
  std::string err;
  int code = kExitOk;
};

Outcome error_outcome(gmc_status s, const std::string& context) {
  Outcome o;
  o.code = exit_code(s);
  o.err = context + ": " + gmc_status_name(s) + ": " + gmc_last_error();
  if (!o.err.empty() && o.err.back() != '\n') o.err += "\n";
  return o;
}

std::optional<Outcome> load(const std::string& path, GraphPtr& graph) {
  gmc_graph* raw = nullptr;
  const gmc_status s = gmc_graph_load(path.c_str(), &raw);
  if (s != GMC_OK) return error_outcome(s, path);
  graph.reset(raw);
  return std::nullopt;
}

Outcome run_validate(const std::string& path) {
  GraphPtr graph;
  if (auto failed = load(path, graph)) return *failed;
  char* report = nullptr;
  const gmc_status s = gmc_graph_validate(graph.get(), &report);
  Outcome o;
  o.out = take(report);
  o.code = exit_code(s);
  return o;
}

Outcome run_bound(const std::string& path, const BoundFlags& flags) {
  GraphPtr graph;
  if (auto failed = load(path, graph)) return *failed;
  Outcome o;
  if (flags.normalize_first) {
    gmc_graph* normalized = nullptr;
    char* moves = nullptr;
    const gmc_status s = gmc_graph_normalize(graph.get(), &normalized, &moves);
    if (s != GMC_OK) return error_outcome(s, path);
    graph.reset(normalized);
    std::istringstream lines(take(moves));
    for (std::string line; std::getline(lines, line);) o.out += "normalized " + line + "\n";
  }
  const gmc_bound_options opts = options_from(flags);
  gmc_report* raw = nullptr;
  const gmc_status s = gmc_bound(graph.get(), &opts, &raw);
  if (s != GMC_OK) {
    Outcome e = error_outcome(s, path);
    e.out = o.out;
    return e;
  }
  ReportPtr report(raw);
  o.out += std::to_string(gmc_report_total(report.get())) + " (" +
           gmc_theorem_name(gmc_report_theorem(report.get())) + ")\n";
  if (flags.breakdown) {
    char* json = nullptr;
    const gmc_status js = gmc_report_to_json(report.get(), &json);
    if (js != GMC_OK) return error_outcome(js, path);
    o.out += take(json);
  }
  return o;
}

Outcome run_normalize(const std::string& path, const std::string& output) {
  GraphPtr graph;
  if (auto failed = load(path, graph)) return *failed;
  gmc_graph* normalized = nullptr;
  char* moves = nullptr;
  gmc_status s = gmc_graph_normalize(graph.get(), &normalized, &moves);
  if (s != GMC_OK) return error_outcome(s, path);
  GraphPtr result(normalized);
  Outcome o;
  o.err = take(moves);
  char* text = nullptr;
  s = gmc_graph_serialize(result.get(), &text);
  if (s != GMC_OK) return error_outcome(s, path);
  const std::string doc = take(text);
  if (output.empty()) {
    o.out = doc;
  } else {
    std::ofstream f(output, std::ios::binary);
    f << doc;
    if (!f) {
      o.code = kExitInvalid;
      o.err += "cannot write " + output + "\n";
    }
  }
  return o;
}

Outcome from_report(gmc_status s, char* report) {
  Outcome o;
  o.out = take(report);
  o.code = exit_code(s);
  if (s != GMC_OK && s != GMC_ORACLE_MISMATCH) o.err = std::string(gmc_last_error()) + "\n";
  return o;
}

Outcome run_oracle_lemma(std::int64_t beta_max) {
  char* report = nullptr;
  const gmc_status s = gmc_oracle_lemma(beta_max, &report);
  return from_report(s, report);
}

Outcome run_oracle_phi(const std::string& path, const BoundFlags& flags) {
  GraphPtr graph;
  if (auto failed = load(path, graph)) return *failed;
  char* report = nullptr;
  const gmc_status s = gmc_oracle_phi(graph.get(), options_from(flags).max_trees, &report);
  return from_report(s, report);
}

Outcome run_oracle_minf(const std::string& path, const BoundFlags& flags) {
  GraphPtr graph;
  if (auto failed = load(path, graph)) return *failed;
  const gmc_bound_options opts = options_from(flags);
  char* report = nullptr;
  const gmc_status s = gmc_oracle_minf(graph.get(), &opts, &report);
  return from_report(s, report);
}

Outcome run_batch(const std::string& dir, const BoundFlags& flags) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) return {"", "cannot read directory " + dir + ": " + ec.message() + "\n", kExitParse};
  std::sort(files.begin(), files.end());

  std::vector<std::future<Outcome>> jobs;
  for (const auto& file : files) {
    jobs.push_back(std::async(std::launch::async, [file, flags] {
      const std::string name = file.filename().string();
      BoundFlags plain = flags;
      plain.breakdown = false;
      Outcome r = run_bound(file.string(), plain);
      Outcome line;
      line.code = r.code;
      if (r.code == kExitOk) {
        line.out = name + ": " + r.out;
      } else {
        std::string msg = r.err;
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        while (!msg.empty() && msg.back() == ' ') msg.pop_back();
        line.out = name + ": error " + std::to_string(r.code) + ": " + msg + "\n";
      }
      return line;
    }));
  }
  Outcome all;
  for (auto& job : jobs) {
    Outcome r = job.get();
    all.out += r.out;
    all.code = std::max(all.code, r.code);
  }
  return all;
}

void add_bound_flags(CLI::App* cmd, BoundFlags& flags, bool with_theorem) {
  if (with_theorem)
    cmd->add_option("--theorem", flags.theorem, "auto|regular|tree|general")
        ->check(CLI::IsMember({"auto", "regular", "tree", "general"}));
  cmd->add_option("--max-trees", flags.max_trees, "cap on optimal spanning trees");
  cmd->add_option("--max-assignments", flags.max_assignments,
                  "cap on labellings per tree (default from MC_MAX_ASSIGNMENTS or 2^20)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matveev complexity upper bounds for graph manifolds given by decomposition graphs"};
  app.require_subcommand(1);

  std::string path, dir, output;
  std::int64_t beta_max = 30;
  BoundFlags flags;

  auto* validate = app.add_subcommand("validate", "check a decomposition graph file");
  validate->add_option("path", path)->required();

  auto* bound = app.add_subcommand("bound", "compute the complexity upper bound");
  bound->add_option("path", path)->required();
  add_bound_flags(bound, flags, true);
  bound->add_flag("--breakdown", flags.breakdown, "print every term and the witness");
  bound->add_flag("--normalize-first", flags.normalize_first, "normalize edge matrices before bounding");

  auto* normalize = app.add_subcommand("normalize", "normalize every edge matrix");
  normalize->add_option("path", path)->required();
  normalize->add_option("-o,--output", output, "write the normalized graph here instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "compare production results with brute force");
  oracle->require_subcommand(1);
  auto* lemma = oracle->add_subcommand("lemma", "check the matrix complexity closed form");
  lemma->add_option("beta_max", beta_max)->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  auto* phi = oracle->add_subcommand("phi", "greedy vs brute-force Phi(G)");
  phi->add_option("path", path)->required();
  phi->add_option("--max-trees", flags.max_trees, "cap on enumerated spanning trees");
  auto* minf = oracle->add_subcommand("minf", "labelling search vs brute force");
  minf->add_option("path", path)->required();
  add_bound_flags(minf, flags, true);

  auto* batch = app.add_subcommand("batch", "bound every .json file in a directory");
  batch->add_option("dir", dir)->required();
  add_bound_flags(batch, flags, true);

  CLI11_PARSE(app, argc, argv);

  Outcome o;
  if (*validate) o = run_validate(path);
  else if (*bound) o = run_bound(path, flags);
  else if (*normalize) o = run_normalize(path, output);
  else if (*lemma) o = run_oracle_lemma(beta_max);
  else if (*phi) o = run_oracle_phi(path, flags);
  else if (*minf) o = run_oracle_minf(path, flags);
  else if (*batch) o = run_batch(dir, flags);

  std::cout << o.out << std::flush;
  std::cerr << o.err << std::flush;
  return o.code;
}
