#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace iterpoly {

enum class Errc {
  invalid_input,
  invalid_modulus,
  invalid_seed,
  invalid_root,
  scale_limit,
  contract_violation,
  no_alpha_k,
  supersingular_prime,
  ordinary_prime,
  unknown_suite,
  parse_error,
};

const char* errc_name(Errc c);

/// Every recoverable failure surfaces as an Error carrying a code, so the
/// C API and the CLI can map it to a stable status / exit code.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Residue in [0, p).  Plain integer; the owning PrimeField supplies the
/// arithmetic, so polynomials can store bare words.
using Fp = std::uint64_t;

/// The prime field F_p for an odd prime p below 2^62.
class PrimeField {
public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  Fp reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return r < 0 ? static_cast<Fp>(r + static_cast<long long>(p_)) : static_cast<Fp>(r);
  }
  Fp add(Fp a, Fp b) const {
    Fp s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp mul(Fp a, Fp b) const {
    return static_cast<Fp>(static_cast<unsigned __int128>(a) * b % p_);
  }
  Fp pow(Fp a, std::uint64_t e) const;
  Fp inv(Fp a) const;

  /// 0 for a = 0, +1 for nonzero squares, -1 for non-squares.
  int legendre(Fp a) const;

  /// Square root when one exists; of the two roots the one with the smaller
  /// integer representative is returned.  sqrt(0) = 0.
  std::optional<Fp> sqrt(Fp a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint64_t p_;
};

}  // namespace iterpoly
