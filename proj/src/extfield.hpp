#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fppoly.hpp"

namespace iterpoly {

/// Element of F_{p^n}: exactly n residues, c[i] the coefficient of the
/// generator power x^i modulo the field's defining polynomial.
struct ExtElem {
  std::vector<Fp> c;
  bool operator==(const ExtElem&) const = default;
};

/// F_{p^n} realized as F_p[x]/(modulus) for a monic irreducible modulus of
/// degree n.  When no modulus is supplied the first monic irreducible of
/// degree n in the canonical order is used, so contexts are reproducible.
class ExtField {
public:
  ExtField(std::uint64_t p, unsigned n);
  ExtField(std::uint64_t p, unsigned n, FpPoly modulus);

  const PrimeField& base() const { return F_; }
  std::uint64_t p() const { return F_.p(); }
  unsigned degree() const { return n_; }
  const FpPoly& modulus() const { return mod_; }
  const BigInt& order() const { return order_; }
  std::optional<std::uint64_t> order_u64() const { return order64_; }

  ExtElem zero() const { return ExtElem{std::vector<Fp>(n_, 0)}; }
  ExtElem one() const { return from_base(1); }
  ExtElem gen() const;  // the residue class of x
  ExtElem from_base(Fp v) const;
  ExtElem from_poly(const FpPoly& f) const;  // reduce mod the defining polynomial
  FpPoly to_poly(const ExtElem& e) const { return FpPoly(e.c); }

  bool is_zero(const ExtElem& e) const;
  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem neg(const ExtElem& a) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem mul_base(const ExtElem& a, Fp s) const;
  ExtElem inv(const ExtElem& a) const;
  ExtElem pow(const ExtElem& a, const BigInt& e) const;
  ExtElem pow_u64(const ExtElem& a, std::uint64_t e) const;

  /// Evaluate a base-field polynomial at a field element (Horner).
  ExtElem eval(const FpPoly& f, const ExtElem& at) const;

  /// Canonical enumeration: index i in [0, p^n) has base-p digits equal to
  /// the coefficient vector, least significant digit = constant coefficient.
  ExtElem elem_at(std::uint64_t index) const;
  std::uint64_t index_of(const ExtElem& e) const;

  /// First element of multiplicative order p^n - 1 in the canonical
  /// enumeration.  Requires the order to fit a machine word.
  ExtElem primitive() const;

  std::string elem_name(const ExtElem& e) const;  // "c0,c1,...", decimal

private:
  PrimeField F_;
  unsigned n_;
  FpPoly mod_;
  MulContext red_;
  BigInt order_;
  std::optional<std::uint64_t> order64_;

  ExtElem pad(const FpPoly& f) const;
};

/// Dense polynomial with ExtElem coefficients (little-endian), used for the
/// handful of closure computations that need arithmetic over F_{p^n}[T].
using ExtPoly = std::vector<ExtElem>;

namespace extpoly {

int degree(const ExtField& K, const ExtPoly& f);
void trim(const ExtField& K, ExtPoly& f);
ExtPoly from_base(const ExtField& K, const FpPoly& f);
ExtPoly mul(const ExtField& K, const ExtPoly& a, const ExtPoly& b);
ExtPoly rem(const ExtField& K, const ExtPoly& a, const ExtPoly& b);
ExtPoly div_exact(const ExtField& K, const ExtPoly& a, const ExtPoly& b);
ExtPoly gcd(const ExtField& K, ExtPoly a, ExtPoly b);  // monic (or zero)
ExtPoly derivative(const ExtField& K, const ExtPoly& a);
ExtPoly make_monic(const ExtField& K, const ExtPoly& a);
ExtPoly powmod(const ExtField& K, const ExtPoly& base, const BigInt& e, const ExtPoly& mod);

}  // namespace extpoly

/// A root in K of an irreducible base-field polynomial whose degree divides
/// the degree of K.  Equal-degree reduction to a linear factor.
ExtElem find_root(const ExtField& K, const FpPoly& f, Rng& rng);

}  // namespace iterpoly
