#include "doctest.h"
#include "json.hpp"
#include "seqgen.hpp"

using namespace iterpoly;

namespace {

SequenceParams make_params(std::uint64_t p, Fp k, const char* seed, unsigned steps,
                           FactorPolicy policy = FactorPolicy::first) {
  PrimeField F(p);
  SequenceParams params;
  params.p = p;
  params.k = k;
  params.seed = parse_poly(F, seed);
  params.steps = steps;
  params.policy = policy;
  return params;
}

std::vector<SequenceRecord> records_with_degrees(const std::vector<unsigned>& degrees) {
  std::vector<SequenceRecord> seq;
  for (unsigned i = 0; i < degrees.size(); ++i) {
    SequenceRecord r;
    r.index = i;
    r.degree = degrees[i];
    seq.push_back(r);
  }
  return seq;
}

}  // namespace

TEST_CASE("first fork takes both factors") {
  SequencePair pair = build_sequences(make_params(7, 1, "x+1", 4));
  PrimeField F(7);
  CHECK(pair.g[0].poly == pair.params.seed);
  CHECK(pair.g[0].transform == TransformUsed::none);
  // (4x)(theta(x) + 1) = x^2+4x+3 = (x+1)(x+3)
  CHECK(pair.g[1].poly == FpPoly::from_ints(F, {1, 1}));
  CHECK(pair.h[1].poly == FpPoly::from_ints(F, {3, 1}));
  CHECK(pair.g[1].split);
  CHECK(pair.g[1].sibling == SiblingChoice::first);
  CHECK(pair.h[1].sibling == SiblingChoice::second);
  // Parity of the transforms.
  CHECK(pair.g[1].transform == TransformUsed::qhat);
  CHECK(pair.g[2].transform == TransformUsed::q);
  CHECK(pair.g[3].transform == TransformUsed::qhat);
  // Step 2 of g: the transform of x+1 under the even-step map splits and the
  // smaller factor is x+3.
  CHECK(pair.g[2].poly == FpPoly::from_ints(F, {3, 1}));
  // Step 2 of h: x^2+3x+1 is irreducible over F_7.
  CHECK(pair.h[2].poly == FpPoly::from_ints(F, {1, 3, 1}));
  CHECK_FALSE(pair.h[2].split);
  CHECK(pair.h[2].sibling == SiblingChoice::whole);
}

TEST_CASE("every record is irreducible and degrees obey the doubling law") {
  for (std::uint64_t p : {5ull, 7ull, 11ull}) {
    PrimeField F(p);
    for (Fp k = 1; k < p; ++k) {
      SequencePair pair = build_sequences(make_params(p, k, "x+1", 10));
      for (const auto* seq : {&pair.g, &pair.h}) {
        for (std::size_t i = 1; i < seq->size(); ++i) {
          const auto& rec = (*seq)[i];
          CHECK(rec.poly.is_monic());
          CHECK(is_irreducible(F, rec.poly));
          unsigned prev = (*seq)[i - 1].degree;
          CHECK((rec.degree == prev || rec.degree == 2 * prev));
          CHECK((rec.degree == 2 * prev) == !rec.split);
          // Parity law: odd steps use the dual transform.
          CHECK(rec.transform == (i % 2 ? TransformUsed::qhat : TransformUsed::q));
        }
      }
    }
  }
}

TEST_CASE("sequences coincide when the first transform is irreducible") {
  // Over F_7 with k=1 the seed x+3 has an irreducible first transform.
  SequencePair pair = build_sequences(make_params(7, 1, "x+3", 8));
  CHECK_FALSE(pair.g[1].split);
  for (std::size_t i = 0; i < pair.g.size(); ++i) CHECK(pair.g[i].poly == pair.h[i].poly);
}

TEST_CASE("seed validation") {
  CHECK_THROWS_AS(build_sequences(make_params(7, 1, "x^2-1", 4)), Error);   // reducible
  CHECK_THROWS_AS(build_sequences(make_params(7, 1, "2x+1", 4)), Error);    // not monic
  CHECK_THROWS_AS(build_sequences(make_params(7, 0, "x+1", 4)), Error);     // k = 0
  CHECK_THROWS_AS(build_sequences(make_params(7, 1, "x+1", 0)), Error);     // steps
  try {
    build_sequences(make_params(7, 1, "x^2-1", 4));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_seed);
  }
}

TEST_CASE("stabilization index follows the degree pattern") {
  // Doubling every two steps from the start: the first pair at degree 4n
  // begins at index 3, so t = 2.
  auto seq = records_with_degrees({1, 2, 2, 4, 4, 8, 8, 16, 16});
  CHECK(stabilization_index(seq, 1) == 2);
  // A doubling at step one shifts the pattern to t = 1.
  seq = records_with_degrees({1, 2, 4, 4, 8, 8, 16, 16});
  CHECK(stabilization_index(seq, 1) == 1);
  // Constant degrees never stabilize.
  seq = records_with_degrees({1, 1, 1, 1, 1, 1});
  CHECK_FALSE(stabilization_index(seq, 1).has_value());
  // Too short to observe a pair.
  seq = records_with_degrees({1, 2});
  CHECK_FALSE(stabilization_index(seq, 1).has_value());
}

TEST_CASE("alternative bookkeeping diagnostic") {
  auto seq = records_with_degrees({1, 2, 2, 4, 4, 8, 8});
  // Index 2 has degree 2 | 2n and index 4 has degree 4 = 4n.
  CHECK(alt_stabilization_index(seq, 1) == 2);
  seq = records_with_degrees({1, 1, 1, 1});
  CHECK_FALSE(alt_stabilization_index(seq, 1).has_value());
}

TEST_CASE("theoretical bounds") {
  auto b = theoretical_bound(5, 1);
  CHECK(b.bound == 3);
  CHECK_FALSE(b.supersingular);
  b = theoretical_bound(7, 1);
  CHECK(b.bound == 3);
  CHECK(b.supersingular);
  b = theoretical_bound(11, 1);
  CHECK(b.bound == 2);
  CHECK(b.supersingular);
}

TEST_CASE("a long run stabilizes within the bound") {
  // Degree-one seed over F_5 with k=2; the bound is 3.
  bool found = false;
  for (FactorPolicy policy : {FactorPolicy::first, FactorPolicy::second}) {
    SequencePair pair = build_sequences(make_params(5, 2, "x+2", 20, policy));
    for (auto t : {pair.t_g, pair.t_h})
      if (t && *t <= pair.bound.bound) found = true;
  }
  CHECK(found);
}

TEST_CASE("level annotation climbs one level per two steps") {
  SequenceParams params = make_params(7, 1, "x+1", 6);
  SequencePair pair = build_sequences(params);
  annotate_levels(pair, 3000);
  // Root of the seed x+1 is 6, whose orbit tail has length 2.
  REQUIRE(pair.g[0].level.has_value());
  CHECK(*pair.g[0].level == 2);
  REQUIRE(pair.g[2].level.has_value());
  CHECK(*pair.g[2].level == 3);
  REQUIRE(pair.g[4].level.has_value());
  CHECK(*pair.g[4].level == 4);
  REQUIRE(pair.level_law_g.has_value());
  CHECK(*pair.level_law_g);
  // Records whose splitting field exceeds the cap stay unannotated.
  for (const auto& rec : pair.g)
    if (rec.index % 2 == 0 && rec.degree >= 8) CHECK_FALSE(rec.level.has_value());

  SequencePair untouched = build_sequences(params);
  annotate_levels(untouched, 0);
  for (const auto& rec : untouched.g) CHECK_FALSE(rec.level.has_value());
  CHECK_FALSE(untouched.level_law_g.has_value());
}

TEST_CASE("json serialization is stable and carries the schema fields") {
  SequenceParams params = make_params(7, 1, "x+1", 12);
  SequencePair a = build_sequences(params);
  SequencePair b = build_sequences(params);
  CHECK(to_json(a) == to_json(b));
  auto j = nlohmann::json::parse(to_json(a));
  for (const char* key : {"p", "k", "seed", "steps", "case", "bound", "t_g", "t_h", "g", "h"})
    CHECK(j.contains(key));
  auto& rec = j["g"][0];
  for (const char* key : {"index", "coeffs", "degree", "transform", "split"})
    CHECK(rec.contains(key));
  CHECK(rec["coeffs"].is_array());
  CHECK(rec["coeffs"][0].is_string());
  CHECK(j["case"] == "supersingular");
  CHECK(j["bound"] == 3);
  std::string table = sequence_table(a);
  CHECK(table.find("t_g=") != std::string::npos);
}

TEST_CASE("policies change only the factor choices") {
  SequencePair first = build_sequences(make_params(13, 2, "x+1", 8, FactorPolicy::first));
  SequencePair second = build_sequences(make_params(13, 2, "x+1", 8, FactorPolicy::second));
  PrimeField F(13);
  for (std::size_t i = 0; i < first.g.size(); ++i) {
    CHECK(first.g[i].split == second.g[i].split);
    if (first.g[i].split && first.g[i].index >= 2) {
      CHECK(first.g[i].sibling == SiblingChoice::first);
      CHECK(second.g[i].sibling == SiblingChoice::second);
    }
  }
}
