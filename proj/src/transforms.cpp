#include "transforms.hpp"

namespace iterpoly {

namespace {

Fp checked_k(const PrimeField& F, Fp k) {
  k %= F.p();
  if (k == 0) fail(Errc::invalid_input, "k must be nonzero in F_p");
  return k;
}

const FpPoly& checked_monic(const FpPoly& f) {
  if (f.degree() < 1 || !f.is_monic())
    fail(Errc::invalid_input, "transform input must be monic of positive degree");
  return f;
}

}  // namespace

ProjPoint q_point_map(const ExtField& K, Fp k, const ProjPoint& x) {
  k = checked_k(K.base(), k);
  if (x.infinite || K.is_zero(x.v)) return ProjPoint::inf();
  ExtElem s = K.add(x.v, K.inv(x.v));
  return ProjPoint::finite(K.mul_base(s, k));
}

ProjPoint qhat_point_map(const ExtField& K, Fp k, const ProjPoint& x) {
  k = checked_k(K.base(), k);
  if (x.infinite || K.is_zero(x.v)) return ProjPoint::inf();
  const PrimeField& F = K.base();
  Fp k2 = F.mul(k, k);
  ExtElem num = K.sub(K.mul(x.v, x.v), K.from_base(F.mul(4 % F.p(), k2)));
  ExtElem den = K.mul_base(x.v, F.mul(4 % F.p(), k));
  return ProjPoint::finite(K.mul(num, K.inv(den)));
}

ProjPoint xdbl(const ExtField& K, const ProjPoint& x) {
  if (x.infinite) return ProjPoint::inf();
  const ExtElem one = K.one();
  ExtElem x2 = K.mul(x.v, x.v);
  ExtElem den = K.mul_base(K.mul(x.v, K.add(x2, one)), 4 % K.p());
  if (K.is_zero(den)) return ProjPoint::inf();
  ExtElem num = K.sub(x2, one);
  num = K.mul(num, num);
  return ProjPoint::finite(K.mul(num, K.inv(den)));
}

namespace {

FpPoly transform_sum(const PrimeField& F, const FpPoly& f, const FpPoly& quad, Fp scale,
                     bool scale_ascending) {
  // scale_ascending: multiply term i by scale^i (Q_k, scale = k^-1 applied as
  // k^(i-n) = k^i * k^-n overall); otherwise by scale^(n-i) (Qhat_k).
  const unsigned n = static_cast<unsigned>(f.degree());
  std::vector<Fp> acc(2 * n + 1, 0);
  FpPoly quad_pow = FpPoly::one();
  for (unsigned i = 0; i <= n; ++i) {
    Fp coef = f.coeff(i);
    if (coef != 0) {
      Fp s = scale_ascending ? F.pow(scale, i) : F.pow(scale, n - i);
      Fp c = F.mul(coef, s);
      // term: c * x^(n-i) * quad^i
      for (std::size_t j = 0; j < quad_pow.coeffs().size(); ++j)
        acc[n - i + j] = F.add(acc[n - i + j], F.mul(c, quad_pow.coeffs()[j]));
    }
    if (i < n) quad_pow = poly_mul(F, quad_pow, quad);
  }
  return FpPoly(std::move(acc));
}

}  // namespace

FpPoly q_transform(const PrimeField& F, const FpPoly& f, Fp k) {
  k = checked_k(F, k);
  checked_monic(f);
  const unsigned n = static_cast<unsigned>(f.degree());
  // sum_i f_i k^(i-n) x^(n-i) (x^2+1)^i  =  k^-n * sum_i f_i k^i x^(n-i) (x^2+1)^i
  FpPoly quad = FpPoly::from_ints(F, {1, 0, 1});
  FpPoly out = transform_sum(F, f, quad, k, /*scale_ascending=*/true);
  out = poly_scale(F, out, F.inv(F.pow(k, n)));
  if (out.degree() != static_cast<int>(2 * n) || !out.is_monic())
    fail(Errc::contract_violation, "transform output lost monicity");
  return out;
}

FpPoly qhat_transform(const PrimeField& F, const FpPoly& f, Fp k) {
  k = checked_k(F, k);
  checked_monic(f);
  const unsigned n = static_cast<unsigned>(f.degree());
  Fp fourk = F.mul(4 % F.p(), k);
  Fp fourk2 = F.mul(fourk, k);  // 4k^2
  FpPoly quad = FpPoly(std::vector<Fp>{F.neg(fourk2), 0, 1});
  FpPoly out = transform_sum(F, f, quad, fourk, /*scale_ascending=*/false);
  if (out.degree() != static_cast<int>(2 * n) || !out.is_monic())
    fail(Errc::contract_violation, "transform output lost monicity");
  return out;
}

}  // namespace iterpoly
