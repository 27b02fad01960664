#pragma once

#include "extfield.hpp"

namespace iterpoly {

/// Affine point or the identity on y^2 = x^3 + a x over an extension field.
/// The curve parameter lives in the prime subfield.
struct CurvePoint {
  bool identity = true;
  ExtElem x, y;

  static CurvePoint id() { return CurvePoint{}; }
  static CurvePoint affine(ExtElem px, ExtElem py) {
    return CurvePoint{false, std::move(px), std::move(py)};
  }
  bool operator==(const CurvePoint& o) const {
    return identity == o.identity && (identity || (x == o.x && y == o.y));
  }
};

bool on_curve(const ExtField& K, Fp a, const CurvePoint& P);
CurvePoint ec_neg(const ExtField& K, const CurvePoint& P);

/// Chord-and-tangent group law.  Both points must satisfy the given curve
/// equation; anything else is rejected as InvalidInput.
CurvePoint ec_add(const ExtField& K, Fp a, const CurvePoint& P, const CurvePoint& Q);
CurvePoint ec_double(const ExtField& K, Fp a, const CurvePoint& P);

/// |E(F_{p^n})| for y^2 = x^3 + a x, counted with a quadratic-residue table.
BigInt curve_order(const ExtField& K, Fp a, std::uint64_t cap);

/// Degree-2 isogeny from y^2 = x^3 + x to y^2 = x^3 - 4k^2 x, defined for
/// quadratic residues k (alpha_k = sqrt(k^3) must exist in F_p).  The kernel
/// {identity, (0,0)} maps to the identity.
CurvePoint two_isogeny(const ExtField& K, Fp k, const CurvePoint& P);

/// The dual isogeny, from y^2 = x^3 - 4k^2 x back to y^2 = x^3 + x.
CurvePoint two_isogeny_dual(const ExtField& K, Fp k, const CurvePoint& P);

/// All rational points, identity first then in enumeration order of x with
/// the smaller-root y first.  Intended for exhaustive desk-scale checks.
std::vector<CurvePoint> enumerate_points(const ExtField& K, Fp a, std::uint64_t cap);

}  // namespace iterpoly
