#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fppoly.hpp"

namespace iterpoly {

enum class TransformUsed { none, q, qhat };
enum class SiblingChoice { whole, first, second };

/// Which factor a sequence takes when a transform output splits (steps past
/// the first one; at step one the two sequences take opposite factors).
enum class FactorPolicy { first, second, random_choice };

struct SequenceRecord {
  unsigned index = 0;
  FpPoly poly;
  unsigned degree = 0;
  TransformUsed transform = TransformUsed::none;
  bool split = false;
  SiblingChoice sibling = SiblingChoice::whole;
  std::optional<unsigned> level;  // orbit tail length of a root, when annotated
};

struct TheoreticalBound {
  unsigned bound = 0;
  bool supersingular = false;
};

struct SequenceParams {
  std::uint64_t p = 0;
  Fp k = 0;
  FpPoly seed;
  unsigned steps = 12;
  FactorPolicy policy = FactorPolicy::first;
  std::uint64_t rng_seed = kDefaultRngSeed;
};

struct SequencePair {
  SequenceParams params;
  std::vector<SequenceRecord> g, h;
  std::optional<unsigned> t_g, t_h;          // stabilization indices
  std::optional<unsigned> t_alt_g, t_alt_h;  // first even index whose root field doubles twice
  TheoreticalBound bound;
  std::optional<bool> level_law_g, level_law_h;  // levels advance by one per two steps
};

/// Runs the alternating transform construction for `steps` steps.  The seed
/// must be monic irreducible; odd steps apply the Qhat_k transform, even
/// steps the Q_k transform, and split outputs are resolved by the policy.
SequencePair build_sequences(const SequenceParams& params);

/// Smallest t >= 1 such that every observed pair (t+2j-1, t+2j), j >= 1,
/// has both degrees equal to 2^(1+j) * n, n the seed degree.  Requires at
/// least one observable pair.
std::optional<unsigned> stabilization_index(const std::vector<SequenceRecord>& seq,
                                            unsigned seed_degree);

/// Diagnostic with the alternative bookkeeping: the first even index whose
/// record still has a root in F_{q^2} (degree dividing 2n) while the record
/// two steps later needs F_{q^4} (degree exactly 4n).
std::optional<unsigned> alt_stabilization_index(const std::vector<SequenceRecord>& seq,
                                                unsigned seed_degree);

/// Upper bound for the stabilization index: ceil(e1/2) from the (1+i)-adic
/// valuation when p = 1 mod 4, the 2-adic valuation e0 when p = 3 mod 4.
TheoreticalBound theoretical_bound(std::uint64_t p, unsigned n);

/// Locates a root of each even-index record in the smallest field containing
/// it (fields up to `cap` elements) and records the root's distance to the
/// periodic part of its duplication orbit.  cap = 0 leaves the pair as is.
void annotate_levels(SequencePair& pair, std::uint64_t cap);

std::string to_json(const SequencePair& pair);
std::string sequence_table(const SequencePair& pair);

}  // namespace iterpoly
