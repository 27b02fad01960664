#include "fp.hpp"

namespace iterpoly {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_input: return "InvalidInput";
    case Errc::invalid_modulus: return "InvalidModulus";
    case Errc::invalid_seed: return "InvalidSeed";
    case Errc::invalid_root: return "InvalidRoot";
    case Errc::scale_limit: return "ScaleLimit";
    case Errc::contract_violation: return "ContractViolation";
    case Errc::no_alpha_k: return "NoAlphaK";
    case Errc::supersingular_prime: return "SupersingularPrime";
    case Errc::ordinary_prime: return "OrdinaryPrime";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || (p & 1) == 0 || p >= (1ull << 62) || !is_prime_u64(p))
    fail(Errc::invalid_input, "modulus must be an odd prime below 2^62, got " + std::to_string(p));
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const { return powmod_u64(a % p_, e, p_); }

Fp PrimeField::inv(Fp a) const {
  if (a == 0) fail(Errc::invalid_input, "division by zero in F_p");
  return pow(a, p_ - 2);
}

int PrimeField::legendre(Fp a) const {
  a %= p_;
  if (a == 0) return 0;
  Fp e = pow(a, (p_ - 1) / 2);
  return e == 1 ? 1 : -1;
}

std::optional<Fp> PrimeField::sqrt(Fp a) const {
  a %= p_;
  if (a == 0) return Fp{0};
  if (legendre(a) != 1) return std::nullopt;
  Fp r;
  if (p_ % 4 == 3) {
    r = pow(a, (p_ + 1) / 4);
  } else {
    // Tonelli-Shanks.
    std::uint64_t q = p_ - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    Fp z = 2;
    while (legendre(z) != -1) ++z;
    Fp m = static_cast<Fp>(s);
    Fp c = pow(z, q);
    Fp t = pow(a, q);
    r = pow(a, (q + 1) / 2);
    while (t != 1) {
      Fp t2 = t;
      std::uint64_t i = 0;
      while (t2 != 1) { t2 = mul(t2, t2); ++i; }
      Fp b = c;
      for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
  }
  return r <= p_ - r ? r : p_ - r;
}

}  // namespace iterpoly
