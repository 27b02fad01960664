#pragma once

#include <cstdint>

#include "fppoly.hpp"

namespace iterpoly {

/// Exact element of Z[i].
struct GaussianInt {
  BigInt re = 0, im = 0;

  bool is_zero() const { return re == 0 && im == 0; }
  BigInt norm() const { return re * re + im * im; }
  GaussianInt conj() const { return {re, -im}; }
  bool operator==(const GaussianInt&) const = default;
};

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b);
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b);
GaussianInt gauss_pow(GaussianInt base, std::uint64_t e);
std::string to_string(const GaussianInt& z);

struct RamifiedValuation {
  unsigned e = 0;       // exponent of (1+i)
  GaussianInt cofactor;  // odd norm
};

/// Exact factorization z = (1+i)^e * cofactor with cofactor of odd norm.
RamifiedValuation one_plus_i_valuation(GaussianInt z);

/// Frobenius of y^2 = x^3 + x over F_p as a Gaussian integer a + bi with
/// a^2 + b^2 = p.  The trace is pinned by a brute-force point count and the
/// conjugation ambiguity resolved by b > 0.  Requires p = 1 mod 4.
GaussianInt frobenius_element(std::uint64_t p);

/// Number of points of y^2 = x^3 + c x over F_p, counted directly.
std::uint64_t base_curve_order(std::uint64_t p, Fp c);

struct OrdinaryValuation {
  std::uint64_t p;
  unsigned m, level;
  unsigned e;            // (1+i)-valuation of pi^(2^level * m) - 1
  GaussianInt cofactor;  // odd norm
};

/// Valuation data of pi^(2^level * m) - 1; p = 1 mod 4.
OrdinaryValuation ordinary_valuation(std::uint64_t p, unsigned m, unsigned level);

struct SupersingularValuation {
  std::uint64_t p;
  unsigned m, tower;
  unsigned e;          // 2-adic valuation of (-p)^(2^(tower-1) * m) - 1
  BigInt odd_cofactor;
};

/// Valuation data of (-p)^(2^(tower-1) * m) - 1 for tower >= 1; p = 3 mod 4.
SupersingularValuation supersingular_valuation(std::uint64_t p, unsigned m, unsigned tower);

}  // namespace iterpoly
