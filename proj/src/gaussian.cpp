#include "gaussian.hpp"

#include <sstream>

namespace iterpoly {

GaussianInt operator+(const GaussianInt& a, const GaussianInt& b) { return {a.re + b.re, a.im + b.im}; }
GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) { return {a.re - b.re, a.im - b.im}; }
GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianInt gauss_pow(GaussianInt base, std::uint64_t e) {
  GaussianInt r{1, 0};
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

std::string to_string(const GaussianInt& z) {
  std::ostringstream out;
  out << z.re;
  if (z.im >= 0) out << "+";
  out << z.im << "i";
  return out.str();
}

RamifiedValuation one_plus_i_valuation(GaussianInt z) {
  if (z.is_zero()) fail(Errc::invalid_input, "valuation of zero is undefined");
  RamifiedValuation out;
  // z / (1+i) = ((re+im) + (im-re)i) / 2, exact iff re+im is even.
  while ((z.re + z.im) % 2 == 0) {
    BigInt re = (z.re + z.im) / 2;
    BigInt im = (z.im - z.re) / 2;
    z.re = re;
    z.im = im;
    ++out.e;
  }
  out.cofactor = z;
  return out;
}

std::uint64_t base_curve_order(std::uint64_t p, Fp c) {
  PrimeField F(p);
  c %= p;
  std::uint64_t count = 1;  // the point at infinity
  for (std::uint64_t x = 0; x < p; ++x) {
    Fp t = F.add(F.mul(F.mul(x, x), x), F.mul(c, x));
    int chi = F.legendre(t);
    count += chi == 0 ? 1 : (chi == 1 ? 2 : 0);
  }
  return count;
}

GaussianInt frobenius_element(std::uint64_t p) {
  PrimeField F(p);
  if (p % 4 != 1)
    fail(Errc::supersingular_prime, "the curve is supersingular for p = 3 mod 4; no Gaussian Frobenius");
  std::uint64_t n = base_curve_order(p, 1);
  // n = p + 1 - 2a pins the real part.
  long long a2 = static_cast<long long>(p) + 1 - static_cast<long long>(n);
  if (a2 % 2 != 0) fail(Errc::invalid_input, "curve order parity is inconsistent");
  long long a = a2 / 2;
  long long b2 = static_cast<long long>(p) - a * a;
  if (b2 <= 0) fail(Errc::invalid_input, "trace does not fit a^2 + b^2 = p");
  std::uint64_t b = 0;
  while (b * b < static_cast<std::uint64_t>(b2)) ++b;
  if (b * b != static_cast<std::uint64_t>(b2)) fail(Errc::invalid_input, "p - a^2 is not a square");
  return {BigInt(a), BigInt(b)};
}

OrdinaryValuation ordinary_valuation(std::uint64_t p, unsigned m, unsigned level) {
  if (m == 0) fail(Errc::invalid_input, "m must be positive");
  GaussianInt pi = frobenius_element(p);
  std::uint64_t exp = static_cast<std::uint64_t>(m) << level;
  GaussianInt z = gauss_pow(pi, exp) - GaussianInt{1, 0};
  RamifiedValuation v = one_plus_i_valuation(z);
  return {p, m, level, v.e, v.cofactor};
}

SupersingularValuation supersingular_valuation(std::uint64_t p, unsigned m, unsigned tower) {
  PrimeField F(p);
  if (p % 4 != 3) fail(Errc::ordinary_prime, "the curve is ordinary for p = 1 mod 4");
  if (m == 0 || tower == 0) fail(Errc::invalid_input, "m and tower must be positive");
  std::uint64_t exp = static_cast<std::uint64_t>(m) << (tower - 1);
  BigInt z = 1;
  for (std::uint64_t i = 0; i < exp; ++i) z *= -static_cast<long long>(p);
  z -= 1;
  unsigned e = 0;
  while (z % 2 == 0) {
    z /= 2;
    ++e;
  }
  return {p, m, tower, e, z};
}

}  // namespace iterpoly
