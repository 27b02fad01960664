#include "curve.hpp"

#include <vector>

namespace iterpoly {

bool on_curve(const ExtField& K, Fp a, const CurvePoint& P) {
  if (P.identity) return true;
  ExtElem lhs = K.mul(P.y, P.y);
  ExtElem rhs = K.add(K.mul(K.mul(P.x, P.x), P.x), K.mul_base(P.x, a % K.p()));
  return lhs == rhs;
}

CurvePoint ec_neg(const ExtField& K, const CurvePoint& P) {
  if (P.identity) return P;
  return CurvePoint::affine(P.x, K.neg(P.y));
}

CurvePoint ec_add(const ExtField& K, Fp a, const CurvePoint& P, const CurvePoint& Q) {
  if (!on_curve(K, a, P) || !on_curve(K, a, Q))
    fail(Errc::invalid_input, "points do not lie on the given curve");
  if (P.identity) return Q;
  if (Q.identity) return P;
  ExtElem lambda;
  if (P.x == Q.x) {
    if (P.y == K.neg(Q.y)) return CurvePoint::id();
    // Tangent: (3x^2 + a) / (2y).
    ExtElem num = K.add(K.mul_base(K.mul(P.x, P.x), 3 % K.p()), K.from_base(a % K.p()));
    ExtElem den = K.mul_base(P.y, 2 % K.p());
    lambda = K.mul(num, K.inv(den));
  } else {
    lambda = K.mul(K.sub(Q.y, P.y), K.inv(K.sub(Q.x, P.x)));
  }
  ExtElem x3 = K.sub(K.sub(K.mul(lambda, lambda), P.x), Q.x);
  ExtElem y3 = K.sub(K.mul(lambda, K.sub(P.x, x3)), P.y);
  return CurvePoint::affine(std::move(x3), std::move(y3));
}

CurvePoint ec_double(const ExtField& K, Fp a, const CurvePoint& P) { return ec_add(K, a, P, P); }

namespace {

std::uint64_t checked_order(const ExtField& K, std::uint64_t cap) {
  auto q = K.order_u64();
  if (!q || *q > cap)
    fail(Errc::scale_limit, "field size exceeds the enumeration cap");
  return *q;
}

// sqrt_table[i] = index of the smaller square root of elem_at(i), or UINT64_MAX.
std::vector<std::uint64_t> sqrt_table(const ExtField& K, std::uint64_t q) {
  std::vector<std::uint64_t> table(q, UINT64_MAX);
  for (std::uint64_t z = 0; z < q; ++z) {
    ExtElem e = K.elem_at(z);
    std::uint64_t sq = K.index_of(K.mul(e, e));
    if (table[sq] == UINT64_MAX) table[sq] = z;
  }
  return table;
}

}  // namespace

BigInt curve_order(const ExtField& K, Fp a, std::uint64_t cap) {
  std::uint64_t q = checked_order(K, cap);
  std::vector<bool> is_square(q, false);
  for (std::uint64_t z = 0; z < q; ++z) {
    ExtElem e = K.elem_at(z);
    is_square[K.index_of(K.mul(e, e))] = true;
  }
  BigInt count = 1;
  for (std::uint64_t xi = 0; xi < q; ++xi) {
    ExtElem x = K.elem_at(xi);
    ExtElem t = K.add(K.mul(K.mul(x, x), x), K.mul_base(x, a % K.p()));
    if (K.is_zero(t))
      count += 1;
    else if (is_square[K.index_of(t)])
      count += 2;
  }
  return count;
}

std::vector<CurvePoint> enumerate_points(const ExtField& K, Fp a, std::uint64_t cap) {
  std::uint64_t q = checked_order(K, cap);
  auto roots = sqrt_table(K, q);
  std::vector<CurvePoint> pts;
  pts.push_back(CurvePoint::id());
  for (std::uint64_t xi = 0; xi < q; ++xi) {
    ExtElem x = K.elem_at(xi);
    ExtElem t = K.add(K.mul(K.mul(x, x), x), K.mul_base(x, a % K.p()));
    std::uint64_t ti = K.index_of(t);
    if (roots[ti] == UINT64_MAX) continue;
    ExtElem y = K.elem_at(roots[ti]);
    pts.push_back(CurvePoint::affine(x, y));
    if (!K.is_zero(y)) pts.push_back(CurvePoint::affine(x, K.neg(y)));
  }
  return pts;
}

namespace {

Fp isogeny_alpha(const PrimeField& F, Fp k) {
  k %= F.p();
  if (k == 0) fail(Errc::invalid_input, "k must be nonzero in F_p");
  auto alpha = F.sqrt(F.mul(F.mul(k, k), k));
  if (!alpha) fail(Errc::no_alpha_k, "k^3 has no square root in F_p; k must be a quadratic residue");
  return *alpha;
}

}  // namespace

CurvePoint two_isogeny(const ExtField& K, Fp k, const CurvePoint& P) {
  const PrimeField& F = K.base();
  Fp alpha = isogeny_alpha(F, k);
  if (!on_curve(K, 1, P)) fail(Errc::invalid_input, "point is not on y^2 = x^3 + x");
  if (P.identity || K.is_zero(P.x)) return CurvePoint::id();
  ExtElem x2 = K.mul(P.x, P.x);
  ExtElem x_img = K.mul_base(K.add(P.x, K.inv(P.x)), k % F.p());
  ExtElem y_img = K.mul_base(K.mul(K.mul(P.y, K.sub(x2, K.one())), K.inv(x2)), alpha);
  CurvePoint img = CurvePoint::affine(std::move(x_img), std::move(y_img));
  Fp a_img = F.neg(F.mul(F.mul(4 % F.p(), k), k));
  if (!on_curve(K, a_img, img)) fail(Errc::contract_violation, "isogeny image left the target curve");
  return img;
}

CurvePoint two_isogeny_dual(const ExtField& K, Fp k, const CurvePoint& P) {
  const PrimeField& F = K.base();
  Fp alpha = isogeny_alpha(F, k);
  Fp k2 = F.mul(k % F.p(), k % F.p());
  Fp a_src = F.neg(F.mul(4 % F.p(), k2));
  if (!on_curve(K, a_src, P)) fail(Errc::invalid_input, "point is not on y^2 = x^3 - 4k^2 x");
  if (P.identity || K.is_zero(P.x)) return CurvePoint::id();
  ExtElem x2 = K.mul(P.x, P.x);
  ExtElem four_k2 = K.from_base(F.mul(4 % F.p(), k2));
  ExtElem x_img = K.mul(K.sub(x2, four_k2), K.inv(K.mul_base(P.x, F.mul(4 % F.p(), k % F.p()))));
  ExtElem num = K.mul(P.y, K.add(x2, four_k2));
  ExtElem den = K.mul_base(x2, F.mul(8 % F.p(), alpha));
  ExtElem y_img = K.mul(num, K.inv(den));
  CurvePoint img = CurvePoint::affine(std::move(x_img), std::move(y_img));
  if (!on_curve(K, 1, img)) fail(Errc::contract_violation, "dual isogeny image left the source curve");
  return img;
}

}  // namespace iterpoly
