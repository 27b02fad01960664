#pragma once

#include "extfield.hpp"

namespace iterpoly {

/// Point of the projective line over an extension field: a field element or
/// the point at infinity.
struct ProjPoint {
  bool infinite = true;
  ExtElem v;

  static ProjPoint inf() { return ProjPoint{}; }
  static ProjPoint finite(ExtElem e) { return ProjPoint{false, std::move(e)}; }
  bool operator==(const ProjPoint& o) const {
    return infinite == o.infinite && (infinite || v == o.v);
  }
};

/// x-coordinate map of the 2-isogeny behind the Q_k transform:
/// 0 and infinity go to infinity, otherwise x -> k(x + 1/x).
ProjPoint q_point_map(const ExtField& K, Fp k, const ProjPoint& x);

/// x-coordinate map of the dual isogeny (the Qhat_k transform):
/// 0 and infinity go to infinity, otherwise x -> (x^2 - 4k^2) / (4kx).
ProjPoint qhat_point_map(const ExtField& K, Fp k, const ProjPoint& x);

/// x-only duplication: the rational map induced on x-coordinates by point
/// doubling on y^2 = x^3 + x.  Sends the zeros of 4(x^3 + x) and infinity
/// to infinity, otherwise x -> (x^2 - 1)^2 / (4x(x^2 + 1)).
ProjPoint xdbl(const ExtField& K, const ProjPoint& x);

/// Degree-doubling polynomial transform: f of degree n maps to
/// sum_i f_i k^(i-n) x^(n-i) (x^2+1)^i, monic of degree 2n.
FpPoly q_transform(const PrimeField& F, const FpPoly& f, Fp k);

/// The dual transform: sum_i f_i (4k)^(n-i) x^(n-i) (x^2-4k^2)^i.
FpPoly qhat_transform(const PrimeField& F, const FpPoly& f, Fp k);

}  // namespace iterpoly
