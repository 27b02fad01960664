#include "iterpoly.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <thread>

#include "extfield.hpp"
#include "graph.hpp"
#include "seqgen.hpp"
#include "transforms.hpp"
#include "verify.hpp"

using namespace iterpoly;

struct iterpoly_field {
  std::unique_ptr<ExtField> K;
};

struct iterpoly_graph {
  std::unique_ptr<ExtField> K;  // the graph keeps a pointer into this copy
  std::unique_ptr<FunctionalGraph> g;
};

struct iterpoly_sequence {
  SequencePair pair;
};

namespace {

thread_local std::string t_last_error;

iterpoly_status map_errc(Errc c) {
  switch (c) {
    case Errc::invalid_input:
    case Errc::invalid_root: return ITERPOLY_ERR_INVALID_ARGUMENT;
    case Errc::parse_error: return ITERPOLY_ERR_PARSE;
    case Errc::invalid_modulus: return ITERPOLY_ERR_INVALID_MODULUS;
    case Errc::invalid_seed: return ITERPOLY_ERR_INVALID_SEED;
    case Errc::scale_limit: return ITERPOLY_ERR_SCALE_LIMIT;
    case Errc::contract_violation: return ITERPOLY_ERR_CONTRACT_VIOLATION;
    case Errc::no_alpha_k: return ITERPOLY_ERR_NO_ALPHA;
    case Errc::supersingular_prime:
    case Errc::ordinary_prime: return ITERPOLY_ERR_WRONG_CASE;
    case Errc::unknown_suite: return ITERPOLY_ERR_UNKNOWN_SUITE;
  }
  return ITERPOLY_ERR_INTERNAL;
}

template <typename Fn>
iterpoly_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return ITERPOLY_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return ITERPOLY_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return ITERPOLY_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

iterpoly_status require(bool cond, const char* message) {
  if (cond) return ITERPOLY_OK;
  t_last_error = message;
  return ITERPOLY_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* iterpoly_version(void) { return "0.1.0"; }

const char* iterpoly_status_name(iterpoly_status status) {
  switch (status) {
    case ITERPOLY_OK: return "ok";
    case ITERPOLY_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ITERPOLY_ERR_PARSE: return "parse error";
    case ITERPOLY_ERR_INVALID_MODULUS: return "invalid modulus";
    case ITERPOLY_ERR_INVALID_SEED: return "invalid seed";
    case ITERPOLY_ERR_SCALE_LIMIT: return "scale limit";
    case ITERPOLY_ERR_CONTRACT_VIOLATION: return "contract violation";
    case ITERPOLY_ERR_NO_ALPHA: return "k is not a quadratic residue";
    case ITERPOLY_ERR_WRONG_CASE: return "wrong ordinary/supersingular case";
    case ITERPOLY_ERR_UNKNOWN_SUITE: return "unknown suite";
    case ITERPOLY_ERR_INTERNAL: return "internal error";
  }
  return "unknown";
}

const char* iterpoly_last_error(void) { return t_last_error.c_str(); }

void iterpoly_free(void* ptr) { std::free(ptr); }

iterpoly_status iterpoly_field_new(uint64_t p, uint32_t n, const char* modulus,
                                   iterpoly_field** out) {
  if (auto st = require(out != nullptr, "out must not be null")) return st;
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<iterpoly_field>();
    if (modulus && *modulus) {
      PrimeField F(p);
      handle->K = std::make_unique<ExtField>(p, n, parse_poly(F, modulus));
    } else {
      handle->K = std::make_unique<ExtField>(p, n);
    }
    *out = handle.release();
  });
}

void iterpoly_field_release(iterpoly_field* field) { delete field; }

uint64_t iterpoly_field_p(const iterpoly_field* field) { return field ? field->K->p() : 0; }

uint32_t iterpoly_field_degree(const iterpoly_field* field) {
  return field ? field->K->degree() : 0;
}

iterpoly_status iterpoly_field_modulus(const iterpoly_field* field, char** out) {
  if (auto st = require(field && out, "field and out must not be null")) return st;
  return guarded([&] { *out = dup_string(format_poly(field->K->modulus())); });
}

iterpoly_status iterpoly_poly_is_irreducible(uint64_t p, const char* poly, int* out) {
  if (auto st = require(poly && out, "poly and out must not be null")) return st;
  return guarded([&] {
    PrimeField F(p);
    *out = is_irreducible(F, parse_poly(F, poly)) ? 1 : 0;
  });
}

iterpoly_status iterpoly_transform(uint64_t p, uint64_t k, const char* poly, int dual,
                                   char** out) {
  if (auto st = require(poly && out, "poly and out must not be null")) return st;
  return guarded([&] {
    PrimeField F(p);
    FpPoly f = parse_poly(F, poly);
    FpPoly r = dual ? qhat_transform(F, f, k % p) : q_transform(F, f, k % p);
    *out = dup_string(format_poly(r));
  });
}

iterpoly_status iterpoly_graph_build(const iterpoly_field* field, uint64_t cap,
                                     uint32_t workers, iterpoly_graph** out) {
  if (auto st = require(field && out, "field and out must not be null")) return st;
  *out = nullptr;
  return guarded([&] {
    auto handle = std::make_unique<iterpoly_graph>();
    handle->K = std::make_unique<ExtField>(*field->K);
    std::uint64_t limit = cap ? cap : kDefaultCap;
    unsigned nw = workers ? workers : std::max(1u, std::thread::hardware_concurrency());
    handle->g = std::make_unique<FunctionalGraph>(build_graph(*handle->K, limit, nw));
    *out = handle.release();
  });
}

void iterpoly_graph_release(iterpoly_graph* graph) { delete graph; }

uint64_t iterpoly_graph_node_count(const iterpoly_graph* graph) {
  return graph ? graph->g->node_count() : 0;
}

uint32_t iterpoly_graph_component_count(const iterpoly_graph* graph) {
  return graph ? static_cast<uint32_t>(graph->g->components().size()) : 0;
}

iterpoly_status iterpoly_graph_dot(const iterpoly_graph* graph, int dlog_labels, char** out) {
  if (auto st = require(graph && out, "graph and out must not be null")) return st;
  return guarded([&] {
    *out = dup_string(to_dot(*graph->g, dlog_labels ? DotLabels::dlog : DotLabels::raw));
  });
}

iterpoly_status iterpoly_graph_json(const iterpoly_graph* graph, char** out) {
  if (auto st = require(graph && out, "graph and out must not be null")) return st;
  return guarded([&] { *out = dup_string(to_json(*graph->g)); });
}

iterpoly_status iterpoly_graph_summary(const iterpoly_graph* graph, char** out) {
  if (auto st = require(graph && out, "graph and out must not be null")) return st;
  return guarded([&] { *out = dup_string(summary_table(*graph->g)); });
}

iterpoly_status iterpoly_sequence_run(const iterpoly_sequence_params* params,
                                      iterpoly_sequence** out) {
  if (auto st = require(params && params->seed && out, "params, seed, out must not be null"))
    return st;
  *out = nullptr;
  return guarded([&] {
    PrimeField F(params->p);
    SequenceParams sp;
    sp.p = params->p;
    sp.k = params->k % params->p;
    sp.seed = parse_poly(F, params->seed);
    sp.steps = params->steps ? params->steps : 12;
    switch (params->policy) {
      case 0: sp.policy = FactorPolicy::first; break;
      case 1: sp.policy = FactorPolicy::second; break;
      case 2: sp.policy = FactorPolicy::random_choice; break;
      default: fail(Errc::invalid_input, "policy must be 0, 1 or 2");
    }
    sp.rng_seed = params->rng_seed ? params->rng_seed : kDefaultRngSeed;
    auto handle = std::make_unique<iterpoly_sequence>();
    handle->pair = build_sequences(sp);
    if (params->annotate_cap) annotate_levels(handle->pair, params->annotate_cap);
    *out = handle.release();
  });
}

void iterpoly_sequence_release(iterpoly_sequence* seq) { delete seq; }

iterpoly_status iterpoly_sequence_json(const iterpoly_sequence* seq, char** out) {
  if (auto st = require(seq && out, "sequence and out must not be null")) return st;
  return guarded([&] { *out = dup_string(to_json(seq->pair)); });
}

iterpoly_status iterpoly_sequence_table(const iterpoly_sequence* seq, char** out) {
  if (auto st = require(seq && out, "sequence and out must not be null")) return st;
  return guarded([&] { *out = dup_string(sequence_table(seq->pair)); });
}

iterpoly_status iterpoly_verify_run(const iterpoly_verify_params* params, char** report,
                                    int* all_pass) {
  if (auto st = require(params && params->suite && report && all_pass,
                        "params, suite, report, all_pass must not be null"))
    return st;
  return guarded([&] {
    VerifyOptions opts;
    opts.p = params->p;
    opts.n = params->n;
    opts.towers = params->towers;
    opts.steps = params->steps;
    opts.cap = params->cap ? params->cap : kDefaultCap;
    opts.workers = params->workers;
    opts.rng_seed = params->rng_seed ? params->rng_seed : kDefaultRngSeed;
    Report rep = run_suite(params->suite, opts);
    *report = dup_string(rep.text());
    *all_pass = rep.all_pass ? 1 : 0;
  });
}

iterpoly_status iterpoly_atlas_run(const iterpoly_atlas_params* params, char** csv) {
  if (auto st = require(params && csv, "params and csv must not be null")) return st;
  return guarded([&] {
    AtlasOptions opts;
    opts.p_min = params->p_min;
    opts.p_max = params->p_max;
    opts.n = params->n ? params->n : 1;
    opts.steps = params->steps ? params->steps : 16;
    opts.cap = params->cap ? params->cap : kDefaultCap;
    opts.workers = params->workers;
    opts.rng_seed = params->rng_seed ? params->rng_seed : kDefaultRngSeed;
    *csv = dup_string(atlas_csv(opts));
  });
}

}  // extern "C"
