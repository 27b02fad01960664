// Command-line front end for the iterpoly shared library.
//
// Exit codes: 0 success (and all checks passed for `verify`),
//             1 runtime failure or failed verification,
//             2 usage or validation error,
//             3 enumeration cap exceeded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "iterpoly.h"

namespace {

int status_exit(iterpoly_status st) {
  switch (st) {
    case ITERPOLY_OK: return 0;
    case ITERPOLY_ERR_INVALID_ARGUMENT:
    case ITERPOLY_ERR_PARSE:
    case ITERPOLY_ERR_INVALID_MODULUS:
    case ITERPOLY_ERR_INVALID_SEED:
    case ITERPOLY_ERR_UNKNOWN_SUITE: return 2;
    case ITERPOLY_ERR_SCALE_LIMIT: return 3;
    default: return 1;
  }
}

int report_error(iterpoly_status st) {
  std::cerr << "error: " << iterpoly_status_name(st) << ": " << iterpoly_last_error() << "\n";
  return status_exit(st);
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

std::uint64_t default_cap() {
  if (const char* env = std::getenv("ITERPOLY_CAP")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed ITERPOLY_CAP\n";
  }
  return 0;  // library default
}

struct StringGuard {
  char* ptr = nullptr;
  ~StringGuard() { iterpoly_free(ptr); }
};

int cmd_graph(std::uint64_t p, std::uint32_t n, const std::string& modulus,
              const std::string& format, const std::string& labels, std::string out_path,
              std::uint64_t cap, std::uint32_t workers) {
  iterpoly_field* field = nullptr;
  iterpoly_status st = iterpoly_field_new(p, n, modulus.empty() ? nullptr : modulus.c_str(), &field);
  if (st != ITERPOLY_OK) return report_error(st);
  iterpoly_graph* graph = nullptr;
  st = iterpoly_graph_build(field, cap, workers, &graph);
  iterpoly_field_release(field);
  if (st != ITERPOLY_OK) return report_error(st);

  int rc = 0;
  const std::string stem = out_path.empty()
                               ? "graph_p" + std::to_string(p) + "_n" + std::to_string(n)
                               : out_path;
  auto emit = [&](const char* kind) -> int {
    StringGuard text;
    iterpoly_status s = std::string(kind) == "dot"
                            ? iterpoly_graph_dot(graph, labels == "dlog" ? 1 : 0, &text.ptr)
                            : iterpoly_graph_json(graph, &text.ptr);
    if (s != ITERPOLY_OK) return report_error(s);
    std::string path = stem;
    const std::string suffix = std::string(".") + kind;
    if (path.size() < suffix.size() || path.substr(path.size() - suffix.size()) != suffix)
      path += suffix;
    if (!write_file(path, text.ptr)) {
      std::cerr << "error: cannot write " << path << "\n";
      return 1;
    }
    std::cout << "wrote " << path << "\n";
    return 0;
  };
  if (format == "dot" || format == "both") rc = emit("dot");
  if (rc == 0 && (format == "json" || format == "both")) rc = emit("json");
  if (rc == 0) {
    StringGuard summary;
    st = iterpoly_graph_summary(graph, &summary.ptr);
    if (st != ITERPOLY_OK)
      rc = report_error(st);
    else
      std::cout << summary.ptr;
  }
  iterpoly_graph_release(graph);
  return rc;
}

int cmd_sequence(std::uint64_t p, std::uint64_t k, const std::string& seed, std::uint32_t steps,
                 const std::string& policy, std::uint64_t rng_seed, std::uint64_t annotate_cap,
                 std::string out_path) {
  iterpoly_sequence_params params{};
  params.p = p;
  params.k = k;
  params.seed = seed.c_str();
  params.steps = steps;
  params.policy = policy == "second" ? 1u : (policy == "random" ? 2u : 0u);
  params.rng_seed = rng_seed;
  params.annotate_cap = annotate_cap;
  iterpoly_sequence* seq = nullptr;
  iterpoly_status st = iterpoly_sequence_run(&params, &seq);
  if (st != ITERPOLY_OK) return report_error(st);
  int rc = 0;
  {
    StringGuard json;
    st = iterpoly_sequence_json(seq, &json.ptr);
    if (st != ITERPOLY_OK) {
      rc = report_error(st);
    } else {
      std::string path = out_path.empty()
                             ? "sequence_p" + std::to_string(p) + "_k" + std::to_string(k) + ".json"
                             : out_path;
      if (!write_file(path, json.ptr)) {
        std::cerr << "error: cannot write " << path << "\n";
        rc = 1;
      } else {
        std::cout << "wrote " << path << "\n";
      }
    }
  }
  if (rc == 0) {
    StringGuard table;
    st = iterpoly_sequence_table(seq, &table.ptr);
    if (st != ITERPOLY_OK)
      rc = report_error(st);
    else
      std::cout << table.ptr;
  }
  iterpoly_sequence_release(seq);
  return rc;
}

int cmd_verify(const std::string& suite, std::uint64_t p, std::uint32_t n, std::uint32_t towers,
               std::uint32_t steps, std::uint64_t cap, std::uint32_t workers,
               std::uint64_t rng_seed) {
  iterpoly_verify_params params{};
  params.suite = suite.c_str();
  params.p = p;
  params.n = n;
  params.towers = towers;
  params.steps = steps;
  params.cap = cap;
  params.workers = workers;
  params.rng_seed = rng_seed;
  StringGuard report;
  int all_pass = 0;
  iterpoly_status st = iterpoly_verify_run(&params, &report.ptr, &all_pass);
  if (st != ITERPOLY_OK) return report_error(st);
  std::cout << report.ptr;
  return all_pass ? 0 : 1;
}

int cmd_atlas(std::uint64_t p_min, std::uint64_t p_max, std::uint32_t n, std::uint32_t steps,
              std::uint64_t cap, std::uint32_t workers, std::uint64_t rng_seed,
              const std::string& out_path) {
  iterpoly_atlas_params params{};
  params.p_min = p_min;
  params.p_max = p_max;
  params.n = n;
  params.steps = steps;
  params.cap = cap;
  params.workers = workers;
  params.rng_seed = rng_seed;
  StringGuard csv;
  iterpoly_status st = iterpoly_atlas_run(&params, &csv.ptr);
  if (st != ITERPOLY_OK) return report_error(st);
  if (!write_file(out_path, csv.ptr)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iterpoly: irreducible-polynomial sequences and duplication graphs over F_p"};
  app.require_subcommand(1);
  const std::uint64_t env_cap = default_cap();

  // graph
  auto* graph = app.add_subcommand("graph", "build the duplication graph over P^1(F_{p^n})");
  std::uint64_t g_p = 0;
  std::uint32_t g_n = 1;
  std::string g_modulus, g_format = "dot", g_labels = "raw", g_out;
  std::uint64_t g_cap = env_cap;
  std::uint32_t g_workers = 0;
  graph->add_option("--p", g_p, "odd prime characteristic")->required();
  graph->add_option("--n", g_n, "extension degree (default 1)");
  graph->add_option("--modulus", g_modulus, "defining polynomial (default canonical)");
  graph->add_option("--format", g_format, "dot|json|both (default dot)")
      ->check(CLI::IsMember({"dot", "json", "both"}));
  graph->add_option("--labels", g_labels, "raw|dlog node labels (default raw)")
      ->check(CLI::IsMember({"raw", "dlog"}));
  graph->add_option("--out", g_out, "output path stem (default graph_p<p>_n<n>)");
  graph->add_option("--cap", g_cap, "node enumeration cap (default 2^24 or ITERPOLY_CAP)");
  graph->add_option("--workers", g_workers, "worker threads (default hardware)");

  // sequence
  auto* sequence = app.add_subcommand("sequence", "run the alternating-transform construction");
  std::uint64_t s_p = 0, s_k = 0, s_rng = 0, s_annotate = 0;
  std::uint32_t s_steps = 12;
  std::string s_seed, s_policy = "first", s_out;
  sequence->add_option("--p", s_p, "odd prime characteristic")->required();
  sequence->add_option("--k", s_k, "nonzero parameter k in F_p")->required();
  sequence->add_option("--seed", s_seed, "monic irreducible seed polynomial")->required();
  sequence->add_option("--steps", s_steps, "construction steps (default 12)");
  sequence->add_option("--policy", s_policy, "factor choice: first|second|random")
      ->check(CLI::IsMember({"first", "second", "random"}));
  sequence->add_option("--rng-seed", s_rng, "seed for the randomized steps");
  sequence->add_option("--annotate-cap", s_annotate,
                       "annotate root levels in fields up to this size (default off)");
  sequence->add_option("--out", s_out, "output JSON path (default sequence_p<p>_k<k>.json)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string v_suite;
  std::uint64_t v_p = 0, v_cap = env_cap, v_rng = 0;
  std::uint32_t v_n = 0, v_towers = 0, v_steps = 0, v_workers = 0;
  verify->add_option("suite", v_suite,
                     "composition|preimage|isogeny|valuation|depth|orders|doubling|all")
      ->required();
  verify->add_option("--p", v_p, "restrict to one prime (default: suite grid)");
  verify->add_option("--n", v_n, "extension degree override");
  verify->add_option("--towers", v_towers, "tower range for the depth suite");
  verify->add_option("--steps", v_steps, "steps for the doubling suite (default 16)");
  verify->add_option("--cap", v_cap, "node enumeration cap");
  verify->add_option("--workers", v_workers, "worker threads");
  verify->add_option("--rng-seed", v_rng, "seed for randomized steps");

  // atlas
  auto* atlas = app.add_subcommand("atlas", "batch CSV over a prime range");
  std::uint64_t a_pmin = 5, a_pmax = 13, a_cap = env_cap, a_rng = 0;
  std::uint32_t a_n = 1, a_steps = 16, a_workers = 0;
  std::string a_out = "atlas.csv";
  atlas->add_option("--p-min", a_pmin, "smallest prime (default 5)");
  atlas->add_option("--p-max", a_pmax, "largest prime (default 13)");
  atlas->add_option("--n", a_n, "seed/extension degree (default 1)");
  atlas->add_option("--steps", a_steps, "sequence steps per cell (default 16)");
  atlas->add_option("--cap", a_cap, "node enumeration cap");
  atlas->add_option("--workers", a_workers, "worker threads");
  atlas->add_option("--rng-seed", a_rng, "seed for randomized steps");
  atlas->add_option("--out", a_out, "output CSV path (default atlas.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (graph->parsed())
    return cmd_graph(g_p, g_n, g_modulus, g_format, g_labels, g_out, g_cap, g_workers);
  if (sequence->parsed())
    return cmd_sequence(s_p, s_k, s_seed, s_steps, s_policy, s_rng, s_annotate, s_out);
  if (verify->parsed())
    return cmd_verify(v_suite, v_p, v_n, v_towers, v_steps, v_cap, v_workers, v_rng);
  if (atlas->parsed())
    return cmd_atlas(a_pmin, a_pmax, a_n, a_steps, a_cap, a_workers, a_rng, a_out);
  return 2;
}
