#include "verify.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "curve.hpp"
#include "gaussian.hpp"
#include "graph.hpp"
#include "seqgen.hpp"
#include "transforms.hpp"

namespace iterpoly {

void Report::add(std::string name, bool pass, std::string detail) {
  all_pass = all_pass && pass;
  lines.push_back({std::move(name), pass, std::move(detail)});
}

std::string Report::text() const {
  std::ostringstream out;
  for (const auto& line : lines) {
    out << (line.pass ? "[PASS] " : "[FAIL] ") << line.name;
    if (!line.detail.empty()) out << "  (" << line.detail << ")";
    out << "\n";
  }
  out << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
  return out.str();
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ull + b * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<std::uint64_t> prime_grid(const VerifyOptions& opts,
                                      std::initializer_list<std::uint64_t> def) {
  if (opts.p) return {opts.p};
  return def;
}

Report suite_composition(const VerifyOptions& opts) {
  Report rep{"composition"};
  std::vector<unsigned> degrees = opts.n ? std::vector<unsigned>{opts.n} : std::vector<unsigned>{1, 2};
  for (std::uint64_t p : prime_grid(opts, {5, 7, 11, 13})) {
    for (unsigned n : degrees) {
      ExtField K(p, n);
      std::uint64_t q = *K.order_u64();
      std::uint64_t failures = 0, checked = 0;
      for (Fp k = 1; k < p; ++k) {
        for (std::uint64_t idx = 0; idx <= q; ++idx) {
          ProjPoint x = idx == q ? ProjPoint::inf() : ProjPoint::finite(K.elem_at(idx));
          ProjPoint lhs = qhat_point_map(K, k, q_point_map(K, k, x));
          ProjPoint rhs = xdbl(K, x);
          ++checked;
          if (!(lhs == rhs)) ++failures;
        }
      }
      std::ostringstream d;
      d << checked << " point/k pairs, " << failures << " mismatches";
      rep.add("composition p=" + std::to_string(p) + " n=" + std::to_string(n), failures == 0,
              d.str());
    }
  }
  return rep;
}

Report suite_preimage(const VerifyOptions& opts) {
  Report rep{"preimage"};
  std::vector<unsigned> degrees = opts.n ? std::vector<unsigned>{opts.n} : std::vector<unsigned>{1, 2};
  for (std::uint64_t p : prime_grid(opts, {5, 7, 11, 13})) {
    for (unsigned n : degrees) {
      ExtField K(p, n);
      std::uint64_t q = *K.order_u64();
      std::uint64_t failures = 0;
      for (std::uint64_t idx = 0; idx <= q; ++idx) {
        ProjPoint x = idx == q ? ProjPoint::inf() : ProjPoint::finite(K.elem_at(idx));
        unsigned expected = 4;
        if (!x.infinite) {
          ExtElem sq = K.mul(x.v, x.v);
          bool exceptional = K.is_zero(x.v) || sq == K.from_base(K.base().neg(1));
          expected = exceptional ? 2 : 4;
        }
        if (preimage_count_closure(K, x) != expected) ++failures;
      }
      rep.add("preimage p=" + std::to_string(p) + " n=" + std::to_string(n), failures == 0,
              std::to_string(q + 1) + " points, " + std::to_string(failures) + " mismatches");
    }
  }
  return rep;
}

Report suite_isogeny(const VerifyOptions& opts) {
  Report rep{"isogeny"};
  for (std::uint64_t p : prime_grid(opts, {5, 13, 17})) {
    PrimeField F(p);
    ExtField K(p, 1);
    auto points = enumerate_points(K, 1, opts.cap);
    std::uint64_t failures = 0, checked = 0;
    for (Fp k = 1; k < p; ++k) {
      if (F.legendre(k) != 1) continue;
      // Kernel points collapse to the identity.
      CurvePoint zero = CurvePoint::affine(K.zero(), K.zero());
      if (!(two_isogeny(K, k, CurvePoint::id()) == CurvePoint::id()) ||
          !(two_isogeny(K, k, zero) == CurvePoint::id()))
        ++failures;
      for (const auto& P : points) {
        CurvePoint via = two_isogeny_dual(K, k, two_isogeny(K, k, P));
        CurvePoint twice = ec_double(K, 1, P);
        ++checked;
        if (!(via == twice)) ++failures;
      }
    }
    rep.add("isogeny p=" + std::to_string(p), failures == 0,
            std::to_string(checked) + " points over residue k, " + std::to_string(failures) +
                " mismatches");
  }
  return rep;
}

Report suite_valuation(const VerifyOptions& opts) {
  Report rep{"valuation"};
  std::vector<std::uint64_t> ordinary = {5, 13, 17}, super = {7, 11, 19};
  if (opts.p) {
    ordinary.clear();
    super.clear();
    (opts.p % 4 == 1 ? ordinary : super).push_back(opts.p);
  }
  for (std::uint64_t p : ordinary) {
    for (unsigned m : {1u, 2u, 3u}) {
      bool ok = true;
      std::vector<unsigned> es;
      for (unsigned level = 0; level <= 6; ++level) es.push_back(ordinary_valuation(p, m, level).e);
      for (unsigned e : es)
        if (e < 2) ok = false;
      for (unsigned level = 2; level <= 6; ++level)
        if (es[level] != es[level - 1] + 2) ok = false;
      std::ostringstream d;
      d << "e_0..e_6 =";
      for (unsigned e : es) d << " " << e;
      rep.add("valuation ordinary p=" + std::to_string(p) + " m=" + std::to_string(m), ok, d.str());
    }
  }
  for (std::uint64_t p : super) {
    for (unsigned m : {1u, 2u, 3u}) {
      bool ok = true;
      std::vector<unsigned> es;
      for (unsigned tower = 1; tower <= 6; ++tower)
        es.push_back(supersingular_valuation(p, m, tower).e);
      for (std::size_t i = 1; i < es.size(); ++i)
        if (es[i] != es[i - 1] + 1) ok = false;
      std::ostringstream d;
      d << "e_0..e_5 =";
      for (unsigned e : es) d << " " << e;
      rep.add("valuation supersingular p=" + std::to_string(p) + " m=" + std::to_string(m), ok,
              d.str());
    }
  }
  return rep;
}

Report suite_depth(const VerifyOptions& opts) {
  Report rep{"depth"};
  unsigned m = opts.n ? opts.n : 1;
  unsigned towers = opts.towers ? opts.towers : 1;
  for (std::uint64_t p : prime_grid(opts, {5, 7, 11, 13})) {
    DepthReport dr = verify_depth(p, m, 1, towers, opts.cap);
    for (const auto& check : dr.checks) {
      bool ok = check.depth_ok && check.heights_ok && (!check.part2_ok || *check.part2_ok);
      std::ostringstream d;
      d << "predicted " << check.predicted << ", measured " << check.measured;
      if (!check.heights_ok) d << ", leaf height below depth-1";
      if (check.part2_ok) d << ", leaf-children " << (*check.part2_ok ? "ok" : "BAD");
      rep.add("depth p=" + std::to_string(p) + " tower=" + std::to_string(check.tower) + " root=" +
                  check.root,
              ok, d.str());
    }
    for (const auto& note : dr.notes) rep.add("depth p=" + std::to_string(p) + " note", true, note);
    if (!dr.all_ok) rep.all_pass = false;
  }
  return rep;
}

Report suite_orders(const VerifyOptions& opts) {
  Report rep{"orders"};
  {
    std::uint64_t p = 5;
    GaussianInt pi = frobenius_element(p);
    for (unsigned j = 1; j <= 4; ++j) {
      ExtField K(p, j);
      BigInt brute = curve_order(K, 1, opts.cap);
      BigInt predicted = (gauss_pow(pi, j) - GaussianInt{1, 0}).norm();
      rep.add("orders p=5 j=" + std::to_string(j), brute == predicted,
              "brute " + brute.str() + ", norm " + predicted.str());
    }
  }
  for (std::uint64_t p : {7ull, 11ull}) {
    for (unsigned j : {2u, 4u}) {
      ExtField K(p, j);
      BigInt brute = curve_order(K, 1, opts.cap);
      BigInt base = 1;
      for (unsigned i = 0; i < j / 2; ++i) base *= -static_cast<long long>(p);
      BigInt predicted = (base - 1) * (base - 1);
      rep.add("orders p=" + std::to_string(p) + " j=" + std::to_string(j), brute == predicted,
              "brute " + brute.str() + ", square " + predicted.str());
    }
  }
  return rep;
}

struct DoublingCell {
  std::uint64_t p;
  Fp k;
  FpPoly seed;
};

struct DoublingOutcome {
  bool pass = false;
  bool contract_violation = false;
  std::string detail;
};

DoublingOutcome run_doubling_cell(const DoublingCell& cell, unsigned steps,
                                  std::uint64_t rng_seed) {
  DoublingOutcome out;
  const unsigned n = static_cast<unsigned>(cell.seed.degree());
  TheoreticalBound bound = theoretical_bound(cell.p, n);
  std::ostringstream d;
  d << "bound " << bound.bound;
  std::optional<unsigned> best_t;
  unsigned policy_idx = 0;
  for (FactorPolicy policy :
       {FactorPolicy::first, FactorPolicy::second, FactorPolicy::random_choice}) {
    SequenceParams params;
    params.p = cell.p;
    params.k = cell.k;
    params.seed = cell.seed;
    params.steps = steps;
    params.policy = policy;
    params.rng_seed = mix_seed(rng_seed, (cell.p << 24) ^ (cell.k << 8) ^ policy_idx);
    ++policy_idx;
    try {
      SequencePair pair = build_sequences(params);
      for (auto t : {pair.t_g, pair.t_h}) {
        if (!t) continue;
        if (!best_t || *t < *best_t) best_t = *t;
        if (*t <= bound.bound) {
          d << ", t " << *t;
          out.pass = true;
          out.detail = d.str();
          return out;
        }
      }
    } catch (const Error& e) {
      if (e.code() == Errc::contract_violation) {
        out.contract_violation = true;
        out.detail = e.what();
        return out;
      }
      throw;
    }
  }
  if (best_t)
    d << ", best t " << *best_t;
  else
    d << ", no stabilization observed";
  out.detail = d.str() + "; no policy reached the bound";
  return out;
}

Report suite_doubling(const VerifyOptions& opts) {
  Report rep{"doubling"};
  unsigned steps = opts.steps ? opts.steps : 16;
  std::vector<DoublingCell> cells;
  for (std::uint64_t p : prime_grid(opts, {5, 7, 11, 13})) {
    PrimeField F(p);
    std::vector<FpPoly> seeds;
    for (Fp a = 0; a < p; ++a) seeds.push_back(FpPoly({a, 1}));
    seeds.push_back(find_irreducible(F, 2));
    for (Fp k = 1; k < p; ++k)
      for (const auto& seed : seeds) cells.push_back({p, k, seed});
  }
  std::vector<DoublingOutcome> outcomes(cells.size());
  parallel_for(cells.size(), opts.workers,
               [&](std::size_t i) { outcomes[i] = run_doubling_cell(cells[i], steps, opts.rng_seed); });
  // Aggregate one line per (p, k).
  std::size_t i = 0;
  while (i < cells.size()) {
    std::uint64_t p = cells[i].p;
    Fp k = cells[i].k;
    bool ok = true;
    std::string fail_detail;
    std::size_t count = 0;
    while (i < cells.size() && cells[i].p == p && cells[i].k == k) {
      if (!outcomes[i].pass) {
        ok = false;
        if (fail_detail.empty())
          fail_detail = "seed " + format_poly(cells[i].seed) + ": " + outcomes[i].detail;
      }
      ++count;
      ++i;
    }
    rep.add("doubling p=" + std::to_string(p) + " k=" + std::to_string(k), ok,
            ok ? std::to_string(count) + " seeds stabilized within the bound" : fail_detail);
  }
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"composition", "preimage", "isogeny", "valuation", "depth", "orders", "doubling", "all"};
}

Report run_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "composition") return suite_composition(opts);
  if (name == "preimage") return suite_preimage(opts);
  if (name == "isogeny") return suite_isogeny(opts);
  if (name == "valuation") return suite_valuation(opts);
  if (name == "depth") return suite_depth(opts);
  if (name == "orders") return suite_orders(opts);
  if (name == "doubling") return suite_doubling(opts);
  if (name == "all") {
    Report rep{"all"};
    for (const auto& sub :
         {"composition", "preimage", "isogeny", "valuation", "depth", "orders", "doubling"}) {
      Report r = run_suite(sub, opts);
      for (auto& line : r.lines) rep.lines.push_back(std::move(line));
      rep.all_pass = rep.all_pass && r.all_pass;
    }
    return rep;
  }
  fail(Errc::unknown_suite, "unknown suite \"" + name + "\"; expected one of: composition, "
                            "preimage, isogeny, valuation, depth, orders, doubling, all");
}

std::string atlas_csv(const AtlasOptions& opts) {
  std::ostringstream out;
  out << "p,n,k,case,e0,e1,predicted_depth,measured_depth,t,bound,pass\n";
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = std::max<std::uint64_t>(3, opts.p_min); p <= opts.p_max; ++p)
    if (p % 2 == 1 && is_prime_u64(p)) primes.push_back(p);

  struct Row {
    std::uint64_t p;
    Fp k;
    std::string text;
  };
  std::vector<Row> rows;
  for (std::uint64_t p : primes)
    for (Fp k = 1; k < p; ++k) rows.push_back({p, k, ""});

  // Tower measurements are per (p, n); compute them up front.
  std::map<std::uint64_t, std::optional<unsigned>> measured;  // nullopt: cap exceeded / mismatch
  std::map<std::uint64_t, bool> skipped;
  for (std::uint64_t p : primes) {
    BigInt nodes = 1;
    for (unsigned j = 0; j < 2 * opts.n; ++j) nodes *= p;
    nodes += 1;
    if (nodes > opts.cap) {
      skipped[p] = true;
      continue;
    }
    skipped[p] = false;
    DepthReport dr = verify_depth(p, opts.n, 1, 1, opts.cap);
    std::optional<unsigned> depth;
    bool consistent = true;
    for (const auto& check : dr.checks) {
      if (!depth) depth = check.measured;
      if (*depth != check.measured) consistent = false;
    }
    measured[p] = consistent ? depth : std::nullopt;
  }

  parallel_for(rows.size(), opts.workers, [&](std::size_t i) {
    Row& row = rows[i];
    const std::uint64_t p = row.p;
    TheoreticalBound bound = theoretical_bound(p, opts.n);
    unsigned e0, e1;
    if (p % 4 == 1) {
      e0 = ordinary_valuation(p, opts.n, 0).e;
      e1 = ordinary_valuation(p, opts.n, 1).e;
    } else {
      e0 = supersingular_valuation(p, opts.n, 1).e;
      e1 = supersingular_valuation(p, opts.n, 2).e;
    }
    std::ostringstream line;
    line << p << ',' << opts.n << ',' << row.k << ','
         << (bound.supersingular ? "supersingular" : "ordinary") << ',' << e0 << ',' << e1 << ','
         << bound.bound << ',';
    if (skipped[p]) {
      line << ",," << bound.bound << ",skipped";
      row.text = line.str();
      return;
    }
    if (measured[p])
      line << *measured[p];
    else
      line << "mismatch";
    // Sequence stabilization for the canonical seed of degree n.
    PrimeField F(p);
    FpPoly seed = find_irreducible(F, opts.n);
    std::optional<unsigned> best_t;
    bool violation = false;
    unsigned policy_idx = 0;
    for (FactorPolicy policy :
         {FactorPolicy::first, FactorPolicy::second, FactorPolicy::random_choice}) {
      SequenceParams params;
      params.p = p;
      params.k = row.k;
      params.seed = seed;
      params.steps = opts.steps;
      params.policy = policy;
      params.rng_seed = mix_seed(opts.rng_seed, (p << 20) ^ (row.k << 4) ^ policy_idx);
      ++policy_idx;
      try {
        SequencePair pair = build_sequences(params);
        for (auto t : {pair.t_g, pair.t_h})
          if (t && (!best_t || *t < *best_t)) best_t = *t;
      } catch (const Error& e) {
        if (e.code() != Errc::contract_violation) throw;
        violation = true;
      }
    }
    line << ',';
    if (best_t) line << *best_t;
    line << ',' << bound.bound << ',';
    bool pass = !violation && measured[p] && *measured[p] == bound.bound && best_t &&
                *best_t <= bound.bound;
    line << (pass ? "pass" : "fail");
    row.text = line.str();
  });

  for (const auto& row : rows) out << row.text << "\n";
  return out.str();
}

}  // namespace iterpoly
