#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fp.hpp"

namespace iterpoly {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial over F_p.  Coefficients are little-endian:
/// c[i] is the coefficient of x^i.  Canonical form carries no trailing
/// zeros, so the zero polynomial is the empty vector (degree -1).
class FpPoly {
public:
  FpPoly() = default;
  explicit FpPoly(std::vector<Fp> c) : c_(std::move(c)) { trim(); }

  static FpPoly zero() { return FpPoly{}; }
  static FpPoly one() { return FpPoly{{1}}; }
  static FpPoly x() { return FpPoly{{0, 1}}; }
  static FpPoly constant(Fp v) { return v ? FpPoly{{v}} : FpPoly{}; }
  static FpPoly from_ints(const PrimeField& F, std::initializer_list<long long> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Fp leading() const { return c_.empty() ? 0 : c_.back(); }
  Fp coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Fp>& coeffs() const { return c_; }

  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  bool operator==(const FpPoly&) const = default;

private:
  friend std::vector<Fp>& raw(FpPoly& f);
  std::vector<Fp> c_;
};

inline std::vector<Fp>& raw(FpPoly& f) { return f.c_; }

FpPoly poly_add(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly poly_sub(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly poly_scale(const PrimeField& F, const FpPoly& a, Fp s);
FpPoly poly_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly poly_shift(const FpPoly& a, unsigned k);  // a * x^k

/// Quotient and remainder; b must be nonzero.
void poly_divmod(const PrimeField& F, const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly poly_rem(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly poly_gcd(const PrimeField& F, FpPoly a, FpPoly b);  // monic (or zero)
FpPoly poly_derivative(const PrimeField& F, const FpPoly& a);
FpPoly poly_make_monic(const PrimeField& F, const FpPoly& a);
Fp poly_eval(const PrimeField& F, const FpPoly& a, Fp v);

/// Inverse of a modulo m (m irreducible or at least coprime to a).
FpPoly poly_invmod(const PrimeField& F, const FpPoly& a, const FpPoly& m);

/// g^e mod f.  f must be nonconstant.
FpPoly poly_powmod(const PrimeField& F, const FpPoly& g, const BigInt& e, const FpPoly& f);

/// Repeated multiplication modulo a fixed monic modulus.  Precomputes the
/// power-series inverse of the reversed modulus so each reduction costs two
/// truncated products instead of a schoolbook division.
class MulContext {
public:
  MulContext(const PrimeField& F, FpPoly modulus);

  const PrimeField& field() const { return F_; }
  const FpPoly& modulus() const { return m_; }
  int degree() const { return m_.degree(); }

  FpPoly reduce(const FpPoly& a) const;
  FpPoly mul(const FpPoly& a, const FpPoly& b) const { return reduce(poly_mul(F_, a, b)); }
  FpPoly sq(const FpPoly& a) const { return reduce(poly_mul(F_, a, a)); }
  FpPoly pow_u64(const FpPoly& base, std::uint64_t e) const;
  FpPoly pow(const FpPoly& base, const BigInt& e) const;

  /// h(g) mod modulus via Brent-Kung baby-step/giant-step.
  FpPoly compose(const FpPoly& h, const FpPoly& g) const;

private:
  PrimeField F_;
  FpPoly m_;
  FpPoly rev_inv_;  // inverse of reversed modulus mod x^deg
};

/// Cache of x^(p^j) mod the context modulus.  Entries are combined with
/// modular composition: x^(p^(a+b)) = h_b(h_a) mod f.
class FrobeniusTable {
public:
  explicit FrobeniusTable(const MulContext& ctx) : ctx_(&ctx) {}
  const FpPoly& get(unsigned j);

private:
  const MulContext* ctx_;
  std::map<unsigned, FpPoly> cache_;
};

/// r^(1 + p + p^2 + ... + p^(m-1)) mod the context modulus.
FpPoly norm_form(const MulContext& ctx, FrobeniusTable& frob, const FpPoly& r, unsigned m);

/// Rabin test: true iff f is irreducible over F_p.  f must be nonconstant.
bool is_irreducible(const PrimeField& F, const FpPoly& f);

/// First monic irreducible of degree n in the canonical order (coefficient
/// tuples compared from the leading coefficient downward).
FpPoly find_irreducible(const PrimeField& F, unsigned n);

/// Deterministic RNG used wherever a Las Vegas step needs randomness.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next_below(std::uint64_t bound);

private:
  std::mt19937_64 gen_;
};

constexpr std::uint64_t kDefaultRngSeed = 0x17e9d01253ULL;

enum class TransformKind { q, qhat };

/// Internal acceleration hint for split_transform_output: the (irreducible)
/// polynomial the input was transformed from, and which transform was used.
struct SplitHint {
  const FpPoly* parent;
  TransformKind kind;
  Fp k;
};

struct SplitResult {
  bool split;      // false: `first` holds the input, irreducible of degree 2n
  FpPoly first;    // factors ordered by the canonical coefficient order
  FpPoly second;
};

/// Input must be monic of degree 2n and the Q/Qhat-transform of a monic
/// irreducible of degree n.  Returns the input when irreducible, otherwise
/// its two monic irreducible degree-n factors.  Anything else throws
/// Errc::contract_violation.
SplitResult split_transform_output(const PrimeField& F, const FpPoly& f2n, unsigned n, Rng& rng,
                                   const SplitHint* hint = nullptr);

FpPoly parse_poly(const PrimeField& F, std::string_view text);
std::string format_poly(const FpPoly& f);        // "x^2+3x+1"
std::string format_coeff_list(const FpPoly& f);  // "1,3,1"

}  // namespace iterpoly
