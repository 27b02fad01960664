#include "seqgen.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "extfield.hpp"
#include "gaussian.hpp"
#include "json.hpp"
#include "transforms.hpp"

namespace iterpoly {

namespace {

constexpr unsigned kMaxSteps = 64;
constexpr unsigned kMaxDegree = 1u << 20;

const char* transform_name(TransformUsed t) {
  switch (t) {
    case TransformUsed::none: return "none";
    case TransformUsed::q: return "Qk";
    case TransformUsed::qhat: return "QkHat";
  }
  return "?";
}

const char* sibling_name(SiblingChoice s) {
  switch (s) {
    case SiblingChoice::whole: return "whole";
    case SiblingChoice::first: return "first";
    case SiblingChoice::second: return "second";
  }
  return "?";
}

SplitResult transform_and_split(const PrimeField& F, const FpPoly& parent, unsigned index, Fp k,
                                Rng& rng) {
  const bool odd = index % 2 == 1;
  const TransformKind kind = odd ? TransformKind::qhat : TransformKind::q;
  FpPoly big = odd ? qhat_transform(F, parent, k) : q_transform(F, parent, k);
  if (big.degree() > static_cast<int>(kMaxDegree))
    fail(Errc::scale_limit, "sequence degree exceeded the growth cap");
  SplitHint hint{&parent, kind, k};
  return split_transform_output(F, big, static_cast<unsigned>(parent.degree()), rng, &hint);
}

SequenceRecord pick_record(const SplitResult& sr, unsigned index, bool take_second) {
  SequenceRecord rec;
  rec.index = index;
  rec.transform = index % 2 == 1 ? TransformUsed::qhat : TransformUsed::q;
  rec.split = sr.split;
  if (!sr.split) {
    rec.poly = sr.first;
    rec.sibling = SiblingChoice::whole;
  } else {
    rec.poly = take_second ? sr.second : sr.first;
    rec.sibling = take_second ? SiblingChoice::second : SiblingChoice::first;
  }
  rec.degree = static_cast<unsigned>(rec.poly.degree());
  return rec;
}

bool policy_takes_second(FactorPolicy policy, Rng& rng) {
  switch (policy) {
    case FactorPolicy::first: return false;
    case FactorPolicy::second: return true;
    case FactorPolicy::random_choice: return rng.next_below(2) == 1;
  }
  return false;
}

}  // namespace

SequencePair build_sequences(const SequenceParams& params) {
  PrimeField F(params.p);
  Fp k = params.k % F.p();
  if (k == 0) fail(Errc::invalid_input, "k must be nonzero in F_p");
  if (params.steps == 0 || params.steps > kMaxSteps)
    fail(Errc::invalid_input, "steps must lie in [1, " + std::to_string(kMaxSteps) + "]");
  const FpPoly& seed = params.seed;
  if (seed.degree() < 1 || !seed.is_monic())
    fail(Errc::invalid_seed, "seed must be monic of positive degree");
  if (!is_irreducible(F, seed))
    fail(Errc::invalid_seed, "seed polynomial is reducible: " + format_poly(seed));

  SequencePair pair;
  pair.params = params;
  pair.params.k = k;
  pair.bound = theoretical_bound(params.p, static_cast<unsigned>(seed.degree()));
  Rng rng(params.rng_seed);

  SequenceRecord seed_rec{0, seed, static_cast<unsigned>(seed.degree()), TransformUsed::none,
                          false, SiblingChoice::whole, std::nullopt};
  pair.g.push_back(seed_rec);
  pair.h.push_back(seed_rec);

  for (unsigned i = 1; i <= params.steps; ++i) {
    const FpPoly gp = pair.g.back().poly;
    const FpPoly hp = pair.h.back().poly;
    SequenceRecord grec, hrec;
    if (i == 1) {
      // Shared parent; when the output splits the two sequences fork,
      // one factor each.
      SplitResult sr = transform_and_split(F, gp, i, k, rng);
      grec = pick_record(sr, i, false);
      hrec = pick_record(sr, i, true);
    } else {
      SplitResult gsr = transform_and_split(F, gp, i, k, rng);
      grec = pick_record(gsr, i, gsr.split && policy_takes_second(params.policy, rng));
      if (hp == gp && params.policy != FactorPolicy::random_choice) {
        hrec = grec;  // identical parents evolve identically under a fixed policy
      } else {
        SplitResult hsr = hp == gp ? gsr : transform_and_split(F, hp, i, k, rng);
        hrec = pick_record(hsr, i, hsr.split && policy_takes_second(params.policy, rng));
      }
    }
    pair.g.push_back(std::move(grec));
    pair.h.push_back(std::move(hrec));
  }

  unsigned n0 = static_cast<unsigned>(seed.degree());
  pair.t_g = stabilization_index(pair.g, n0);
  pair.t_h = stabilization_index(pair.h, n0);
  pair.t_alt_g = alt_stabilization_index(pair.g, n0);
  pair.t_alt_h = alt_stabilization_index(pair.h, n0);
  return pair;
}

std::optional<unsigned> stabilization_index(const std::vector<SequenceRecord>& seq,
                                            unsigned seed_degree) {
  if (seq.size() < 2) return std::nullopt;
  const unsigned steps = static_cast<unsigned>(seq.size()) - 1;
  for (unsigned t = 1; t + 2 <= steps; ++t) {
    bool ok = true;
    for (unsigned j = 1; t + 2 * j <= steps; ++j) {
      std::uint64_t want = static_cast<std::uint64_t>(seed_degree) << (1 + j);
      if (seq[t + 2 * j - 1].degree != want || seq[t + 2 * j].degree != want) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<unsigned> alt_stabilization_index(const std::vector<SequenceRecord>& seq,
                                                unsigned seed_degree) {
  if (seq.size() < 3) return std::nullopt;
  const unsigned steps = static_cast<unsigned>(seq.size()) - 1;
  for (unsigned idx = 0; idx + 2 <= steps; idx += 2) {
    bool in_q2 = (2 * seed_degree) % seq[idx].degree == 0;
    if (in_q2 && seq[idx + 2].degree == 4 * seed_degree) return idx;
  }
  return std::nullopt;
}

TheoreticalBound theoretical_bound(std::uint64_t p, unsigned n) {
  if (n == 0) fail(Errc::invalid_input, "seed degree must be positive");
  TheoreticalBound out;
  if (p % 4 == 1) {
    out.supersingular = false;
    out.bound = (ordinary_valuation(p, n, 1).e + 1) / 2;
  } else {
    out.supersingular = true;
    out.bound = supersingular_valuation(p, n, 1).e;
  }
  return out;
}

namespace {

std::optional<unsigned> orbit_tail_length(const ExtField& K, const ProjPoint& start) {
  // Brent cycle detection on the duplication orbit.
  ProjPoint tortoise = start;
  ProjPoint hare = xdbl(K, start);
  std::uint64_t power = 1, lam = 1;
  while (!(tortoise == hare)) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = xdbl(K, hare);
    ++lam;
  }
  tortoise = start;
  hare = start;
  for (std::uint64_t i = 0; i < lam; ++i) hare = xdbl(K, hare);
  unsigned mu = 0;
  while (!(tortoise == hare)) {
    tortoise = xdbl(K, tortoise);
    hare = xdbl(K, hare);
    ++mu;
  }
  return mu;
}

void annotate_sequence(std::vector<SequenceRecord>& seq, std::uint64_t p, std::uint64_t cap,
                       std::uint64_t rng_seed,
                       std::map<unsigned, std::unique_ptr<ExtField>>& fields) {
  Rng rng(rng_seed);
  for (auto& rec : seq) {
    if (rec.index % 2 != 0) continue;
    BigInt size = 1;
    for (unsigned j = 0; j < rec.degree; ++j) size *= p;
    if (size > cap) break;  // degrees never shrink
    auto& field = fields[rec.degree];
    if (!field) field = std::make_unique<ExtField>(p, rec.degree);
    ExtElem root = find_root(*field, rec.poly, rng);
    rec.level = orbit_tail_length(*field, ProjPoint::finite(root));
  }
}

std::optional<bool> level_law(const std::vector<SequenceRecord>& seq) {
  std::optional<unsigned> base;
  unsigned annotated = 0;
  bool ok = true;
  for (const auto& rec : seq) {
    if (rec.index % 2 != 0 || !rec.level) continue;
    ++annotated;
    if (!base) base = *rec.level;
    if (*rec.level != *base + rec.index / 2) ok = false;
  }
  if (annotated < 2) return std::nullopt;
  return ok;
}

}  // namespace

void annotate_levels(SequencePair& pair, std::uint64_t cap) {
  if (cap == 0) return;
  std::map<unsigned, std::unique_ptr<ExtField>> fields;
  annotate_sequence(pair.g, pair.params.p, cap, pair.params.rng_seed, fields);
  annotate_sequence(pair.h, pair.params.p, cap, pair.params.rng_seed + 1, fields);
  pair.level_law_g = level_law(pair.g);
  pair.level_law_h = level_law(pair.h);
}

namespace {

nlohmann::ordered_json record_json(const SequenceRecord& rec) {
  nlohmann::ordered_json j;
  j["index"] = rec.index;
  std::vector<std::string> coeffs;
  for (Fp c : rec.poly.coeffs()) coeffs.push_back(std::to_string(c));
  j["coeffs"] = coeffs;
  j["degree"] = rec.degree;
  j["transform"] = transform_name(rec.transform);
  j["split"] = rec.split;
  j["sibling"] = sibling_name(rec.sibling);
  if (rec.level) j["level"] = *rec.level;
  return j;
}

const char* policy_name(FactorPolicy p) {
  switch (p) {
    case FactorPolicy::first: return "first";
    case FactorPolicy::second: return "second";
    case FactorPolicy::random_choice: return "random";
  }
  return "?";
}

}  // namespace

std::string to_json(const SequencePair& pair) {
  nlohmann::ordered_json j;
  j["p"] = pair.params.p;
  j["k"] = pair.params.k;
  j["seed"] = format_poly(pair.params.seed);
  j["steps"] = pair.params.steps;
  j["policy"] = policy_name(pair.params.policy);
  j["rng_seed"] = pair.params.rng_seed;
  j["case"] = pair.bound.supersingular ? "supersingular" : "ordinary";
  j["bound"] = pair.bound.bound;
  j["t_g"] = pair.t_g ? nlohmann::ordered_json(*pair.t_g) : nlohmann::ordered_json(nullptr);
  j["t_h"] = pair.t_h ? nlohmann::ordered_json(*pair.t_h) : nlohmann::ordered_json(nullptr);
  j["t_alt_g"] =
      pair.t_alt_g ? nlohmann::ordered_json(*pair.t_alt_g) : nlohmann::ordered_json(nullptr);
  j["t_alt_h"] =
      pair.t_alt_h ? nlohmann::ordered_json(*pair.t_alt_h) : nlohmann::ordered_json(nullptr);
  if (pair.level_law_g) j["level_law_g"] = *pair.level_law_g;
  if (pair.level_law_h) j["level_law_h"] = *pair.level_law_h;
  nlohmann::ordered_json g = nlohmann::ordered_json::array();
  for (const auto& rec : pair.g) g.push_back(record_json(rec));
  nlohmann::ordered_json h = nlohmann::ordered_json::array();
  for (const auto& rec : pair.h) h.push_back(record_json(rec));
  j["g"] = std::move(g);
  j["h"] = std::move(h);
  return j.dump(2);
}

std::string sequence_table(const SequencePair& pair) {
  std::ostringstream out;
  out << "seq  i  degree  transform  split\n";
  auto dump = [&](const char* name, const std::vector<SequenceRecord>& seq) {
    for (const auto& rec : seq)
      out << name << "  " << rec.index << "  " << rec.degree << "  "
          << transform_name(rec.transform) << "  " << (rec.split ? "yes" : "no") << "\n";
  };
  dump("g", pair.g);
  dump("h", pair.h);
  auto opt = [](const std::optional<unsigned>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  out << "t_g=" << opt(pair.t_g) << " t_h=" << opt(pair.t_h) << " bound=" << pair.bound.bound
      << " case=" << (pair.bound.supersingular ? "supersingular" : "ordinary") << "\n";
  return out.str();
}

}  // namespace iterpoly
