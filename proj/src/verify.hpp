#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fppoly.hpp"

namespace iterpoly {

constexpr std::uint64_t kDefaultCap = 1ull << 24;

struct ReportLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<ReportLine> lines;
  bool all_pass = true;

  void add(std::string name, bool pass, std::string detail = "");
  std::string text() const;
};

struct VerifyOptions {
  std::uint64_t p = 0;   // 0: the suite's default prime grid
  unsigned n = 0;        // 0: suite default
  unsigned towers = 0;   // 0: suite default
  unsigned steps = 0;    // 0: suite default
  std::uint64_t cap = kDefaultCap;
  unsigned workers = 0;  // 0: hardware concurrency
  std::uint64_t rng_seed = kDefaultRngSeed;
};

/// Named verification suites over small reproducible grids:
///   composition  the point maps compose to the duplication map for every k
///   preimage     closure preimage counts (2 above 0 and ±i, else 4)
///   isogeny      the isogeny pair composes to point doubling on E(F_p)
///   valuation    growth laws of the (1+i)-adic and 2-adic valuations
///   depth        measured tree depths match the valuation predictions
///   orders       brute-force curve orders match the norm formulas
///   doubling     sequence degrees stabilize within the theoretical bound
///   all          everything above
Report run_suite(const std::string& name, const VerifyOptions& opts);
std::vector<std::string> suite_names();

struct AtlasOptions {
  std::uint64_t p_min = 5, p_max = 13;
  unsigned n = 1;
  unsigned steps = 16;
  std::uint64_t cap = kDefaultCap;
  unsigned workers = 0;
  std::uint64_t rng_seed = kDefaultRngSeed;
};

/// One CSV row per (p, n, k): valuations, predicted vs measured tree depth,
/// sequence stabilization vs bound.  Rows whose graphs exceed the cap are
/// marked skipped.  Deterministic row order and content.
std::string atlas_csv(const AtlasOptions& opts);

/// Deterministic work distribution: jobs indexed 0..count-1, results must be
/// written to per-index slots by the callable.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace iterpoly
