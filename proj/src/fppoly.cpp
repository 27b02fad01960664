#include "fppoly.hpp"

#include <algorithm>
#include <cctype>
#include <bit>
#include <cmath>
#include <sstream>

namespace iterpoly {

namespace {

constexpr std::size_t kKaratsubaThreshold = 48;

// Schoolbook product, column accumulation.  Three lanes: u64 accumulators
// for tiny p, u128 accumulators for word-sized p, per-term reduction above.
void mul_school(const PrimeField& F, const Fp* a, std::size_t na, const Fp* b, std::size_t nb,
                std::vector<Fp>& out) {
  const std::uint64_t p = F.p();
  out.assign(na + nb - 1, 0);
  if (p < (1ull << 16)) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      std::size_t lo = k >= nb - 1 ? k - (nb - 1) : 0;
      std::size_t hi = std::min(k, na - 1);
      std::uint64_t acc = 0;
      for (std::size_t i = lo; i <= hi; ++i) acc += a[i] * b[k - i];
      out[k] = acc % p;
    }
  } else if (p < (1ull << 31)) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      std::size_t lo = k >= nb - 1 ? k - (nb - 1) : 0;
      std::size_t hi = std::min(k, na - 1);
      unsigned __int128 acc = 0;
      for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<unsigned __int128>(a[i]) * b[k - i];
      out[k] = static_cast<Fp>(acc % p);
    }
  } else {
    for (std::size_t k = 0; k < out.size(); ++k) {
      std::size_t lo = k >= nb - 1 ? k - (nb - 1) : 0;
      std::size_t hi = std::min(k, na - 1);
      std::uint64_t acc = 0;
      for (std::size_t i = lo; i <= hi; ++i) {
        std::uint64_t t = static_cast<Fp>(static_cast<unsigned __int128>(a[i]) * b[k - i] % p);
        acc += t;
        if (acc >= p) acc -= p;
      }
      out[k] = acc;
    }
  }
}

void add_into(const PrimeField& F, std::vector<Fp>& dst, const std::vector<Fp>& src, std::size_t shift) {
  if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] = F.add(dst[i + shift], src[i]);
}

std::vector<Fp> mul_rec(const PrimeField& F, const Fp* a, std::size_t na, const Fp* b, std::size_t nb);

std::vector<Fp> karatsuba(const PrimeField& F, const Fp* a, std::size_t na, const Fp* b, std::size_t nb) {
  std::size_t h = (std::max(na, nb) + 1) / 2;
  std::size_t na0 = std::min(na, h), nb0 = std::min(nb, h);
  std::size_t na1 = na - na0, nb1 = nb - nb0;
  std::vector<Fp> z0 = mul_rec(F, a, na0, b, nb0);
  std::vector<Fp> z2 = na1 && nb1 ? mul_rec(F, a + h, na1, b + h, nb1) : std::vector<Fp>{};
  std::vector<Fp> as(std::max(na0, na1), 0), bs(std::max(nb0, nb1), 0);
  for (std::size_t i = 0; i < na0; ++i) as[i] = a[i];
  for (std::size_t i = 0; i < na1; ++i) as[i] = F.add(as[i], a[h + i]);
  for (std::size_t i = 0; i < nb0; ++i) bs[i] = b[i];
  for (std::size_t i = 0; i < nb1; ++i) bs[i] = F.add(bs[i], b[h + i]);
  std::vector<Fp> z1 = mul_rec(F, as.data(), as.size(), bs.data(), bs.size());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);
  std::vector<Fp> out(na + nb - 1, 0);
  add_into(F, out, z0, 0);
  add_into(F, out, z1, h);
  add_into(F, out, z2, 2 * h);
  out.resize(na + nb - 1);
  return out;
}

std::vector<Fp> mul_rec(const PrimeField& F, const Fp* a, std::size_t na, const Fp* b, std::size_t nb) {
  if (na == 0 || nb == 0) return {};
  if (std::min(na, nb) <= kKaratsubaThreshold) {
    std::vector<Fp> out;
    mul_school(F, a, na, b, nb, out);
    return out;
  }
  if (na > 2 * nb || nb > 2 * na) {
    // Very unbalanced: split the longer operand in half.
    const bool a_long = na > nb;
    const Fp* u = a_long ? a : b;
    std::size_t nu = a_long ? na : nb;
    const Fp* v = a_long ? b : a;
    std::size_t nv = a_long ? nb : na;
    std::size_t h = nu / 2;
    std::vector<Fp> lo = mul_rec(F, u, h, v, nv);
    std::vector<Fp> hi = mul_rec(F, u + h, nu - h, v, nv);
    std::vector<Fp> out(na + nb - 1, 0);
    add_into(F, out, lo, 0);
    add_into(F, out, hi, h);
    out.resize(na + nb - 1);
    return out;
  }
  return karatsuba(F, a, na, b, nb);
}

// Inverse of f as a power series mod x^prec; f must have unit constant term.
FpPoly series_inverse(const PrimeField& F, const FpPoly& f, std::size_t prec) {
  std::vector<Fp> g{F.inv(f.coeff(0))};
  std::size_t cur = 1;
  while (cur < prec) {
    cur = std::min(2 * cur, prec);
    std::vector<Fp> ft(f.coeffs().begin(),
                       f.coeffs().begin() + static_cast<long>(std::min(f.coeffs().size(), cur)));
    std::vector<Fp> fg = mul_rec(F, ft.data(), ft.size(), g.data(), g.size());
    fg.resize(cur, 0);
    // t = 2 - f*g
    for (auto& c : fg) c = F.neg(c);
    fg[0] = F.add(fg[0], 2 % F.p());
    std::vector<Fp> ng = mul_rec(F, g.data(), g.size(), fg.data(), fg.size());
    ng.resize(cur, 0);
    g = std::move(ng);
  }
  return FpPoly(std::move(g));
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FpPoly FpPoly::from_ints(const PrimeField& F, std::initializer_list<long long> coeffs) {
  std::vector<Fp> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.push_back(F.reduce(v));
  return FpPoly(std::move(c));
}

FpPoly poly_add(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  std::vector<Fp> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
  return FpPoly(std::move(c));
}

FpPoly poly_sub(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  std::vector<Fp> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff(i), b.coeff(i));
  return FpPoly(std::move(c));
}

FpPoly poly_scale(const PrimeField& F, const FpPoly& a, Fp s) {
  std::vector<Fp> c(a.coeffs());
  for (auto& v : c) v = F.mul(v, s);
  return FpPoly(std::move(c));
}

FpPoly poly_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly::zero();
  return FpPoly(mul_rec(F, a.coeffs().data(), a.coeffs().size(), b.coeffs().data(), b.coeffs().size()));
}

FpPoly poly_shift(const FpPoly& a, unsigned k) {
  if (a.is_zero()) return a;
  std::vector<Fp> c(a.coeffs().size() + k, 0);
  std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin() + k);
  return FpPoly(std::move(c));
}

void poly_divmod(const PrimeField& F, const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
  if (b.is_zero()) fail(Errc::invalid_input, "polynomial division by zero");
  if (a.degree() < b.degree()) {
    q = FpPoly::zero();
    r = a;
    return;
  }
  Fp lead_inv = F.inv(b.leading());
  std::vector<Fp> rem(a.coeffs());
  std::vector<Fp> quot(a.coeffs().size() - b.coeffs().size() + 1, 0);
  for (std::size_t i = rem.size(); i-- >= b.coeffs().size();) {
    Fp c = F.mul(rem[i], lead_inv);
    if (c != 0) {
      std::size_t off = i - (b.coeffs().size() - 1);
      quot[off] = c;
      for (std::size_t j = 0; j < b.coeffs().size(); ++j)
        rem[off + j] = F.sub(rem[off + j], F.mul(c, b.coeffs()[j]));
    }
    if (i == 0) break;
  }
  q = FpPoly(std::move(quot));
  r = FpPoly(std::move(rem));
}

FpPoly poly_rem(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  poly_divmod(F, a, b, q, r);
  return r;
}

FpPoly poly_gcd(const PrimeField& F, FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = poly_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_make_monic(F, a);
}

FpPoly poly_derivative(const PrimeField& F, const FpPoly& a) {
  if (a.degree() < 1) return FpPoly::zero();
  std::vector<Fp> c(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) c[i - 1] = F.mul(a.coeffs()[i], i % F.p());
  return FpPoly(std::move(c));
}

FpPoly poly_make_monic(const PrimeField& F, const FpPoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return poly_scale(F, a, F.inv(a.leading()));
}

Fp poly_eval(const PrimeField& F, const FpPoly& a, Fp v) {
  Fp acc = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    acc = F.add(F.mul(acc, v), a.coeffs()[i]);
    if (i == 0) break;
  }
  return acc;
}

FpPoly poly_invmod(const PrimeField& F, const FpPoly& a, const FpPoly& m) {
  // Extended Euclid: u*a + v*m = g.
  FpPoly r0 = m, r1 = poly_rem(F, a, m);
  FpPoly u0 = FpPoly::zero(), u1 = FpPoly::one();
  while (!r1.is_zero()) {
    FpPoly q, r2;
    poly_divmod(F, r0, r1, q, r2);
    FpPoly u2 = poly_sub(F, u0, poly_mul(F, q, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.degree() != 0) fail(Errc::invalid_input, "element not invertible modulo the given polynomial");
  return poly_scale(F, u0, F.inv(r0.leading()));
}

FpPoly poly_powmod(const PrimeField& F, const FpPoly& g, const BigInt& e, const FpPoly& f) {
  if (f.degree() < 1) fail(Errc::invalid_modulus, "powmod modulus must be nonconstant");
  if (e < 0) fail(Errc::invalid_input, "powmod exponent must be non-negative");
  MulContext ctx(F, poly_make_monic(F, f));
  return ctx.pow(g, e);
}

MulContext::MulContext(const PrimeField& F, FpPoly modulus) : F_(F), m_(std::move(modulus)) {
  if (m_.degree() < 1 || !m_.is_monic())
    fail(Errc::invalid_modulus, "reduction modulus must be monic and nonconstant");
  std::size_t d = static_cast<std::size_t>(m_.degree());
  std::vector<Fp> rev(m_.coeffs().rbegin(), m_.coeffs().rend());
  rev_inv_ = series_inverse(F, FpPoly(std::move(rev)), d);
}

FpPoly MulContext::reduce(const FpPoly& a) const {
  int d = m_.degree();
  if (a.degree() < d) return a;
  if (a.degree() > 2 * d - 2) return poly_rem(F_, a, m_);
  std::size_t la = static_cast<std::size_t>(a.degree());
  std::size_t qd = la - static_cast<std::size_t>(d);
  std::vector<Fp> rev_a(qd + 1);
  for (std::size_t i = 0; i <= qd; ++i) rev_a[i] = a.coeffs()[la - i];
  std::vector<Fp> qrev =
      mul_rec(F_, rev_a.data(), rev_a.size(), rev_inv_.coeffs().data(), rev_inv_.coeffs().size());
  qrev.resize(qd + 1, 0);
  std::vector<Fp> q(qd + 1);
  for (std::size_t i = 0; i <= qd; ++i) q[i] = qrev[qd - i];
  FpPoly qm = poly_mul(F_, FpPoly(std::move(q)), m_);
  std::vector<Fp> r(static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_.sub(a.coeff(i), qm.coeff(i));
  return FpPoly(std::move(r));
}

FpPoly MulContext::pow_u64(const FpPoly& base, std::uint64_t e) const {
  FpPoly result = reduce(FpPoly::one());
  FpPoly b = reduce(base);
  while (e) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e) b = sq(b);
  }
  return result;
}

FpPoly MulContext::pow(const FpPoly& base, const BigInt& e) const {
  if (e == 0) return reduce(FpPoly::one());
  FpPoly result = reduce(FpPoly::one());
  FpPoly b = reduce(base);
  std::size_t nbits = boost::multiprecision::msb(e) + 1;
  for (std::size_t i = 0; i < nbits; ++i) {
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mul(result, b);
    if (i + 1 < nbits) b = sq(b);
  }
  return result;
}

FpPoly MulContext::compose(const FpPoly& h, const FpPoly& g) const {
  if (h.degree() < 1) return reduce(h);
  FpPoly gr = reduce(g);
  const std::size_t nh = h.coeffs().size();
  const std::size_t t = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(nh))));
  std::vector<FpPoly> baby(t);
  baby[0] = reduce(FpPoly::one());
  for (std::size_t j = 1; j < t; ++j) baby[j] = mul(baby[j - 1], gr);
  FpPoly giant = mul(baby[t - 1], gr);
  const std::size_t d = static_cast<std::size_t>(m_.degree());
  const std::size_t nblocks = (nh + t - 1) / t;
  FpPoly acc = FpPoly::zero();
  std::vector<unsigned __int128> col(d);
  for (std::size_t blk = nblocks; blk-- > 0;) {
    if (!acc.is_zero()) acc = mul(acc, giant);
    std::fill(col.begin(), col.end(), 0);
    for (std::size_t j = 0; j < t; ++j) {
      std::size_t idx = blk * t + j;
      if (idx >= nh) break;
      Fp c = h.coeffs()[idx];
      if (c == 0) continue;
      const auto& pj = baby[j].coeffs();
      for (std::size_t i = 0; i < pj.size(); ++i) col[i] += static_cast<unsigned __int128>(c) * pj[i];
    }
    std::vector<Fp> s(d);
    for (std::size_t i = 0; i < d; ++i) s[i] = static_cast<Fp>(col[i] % F_.p());
    acc = poly_add(F_, acc, FpPoly(std::move(s)));
  }
  return acc;
}

const FpPoly& FrobeniusTable::get(unsigned j) {
  auto it = cache_.find(j);
  if (it != cache_.end()) return it->second;
  FpPoly res;
  if (j == 0) {
    res = ctx_->reduce(FpPoly::x());
  } else if (j == 1) {
    res = ctx_->pow_u64(FpPoly::x(), ctx_->field().p());
  } else if (j % 2 == 0) {
    const FpPoly& half = get(j / 2);
    res = ctx_->compose(half, half);
  } else {
    res = ctx_->compose(get(j - 1), get(1));
  }
  return cache_.emplace(j, std::move(res)).first->second;
}

FpPoly norm_form(const MulContext& ctx, FrobeniusTable& frob, const FpPoly& r, unsigned m) {
  if (m == 0) return ctx.reduce(FpPoly::one());
  FpPoly r0 = ctx.reduce(r);
  FpPoly acc = r0;
  unsigned width = 1;
  for (int bit = std::bit_width(m) - 2; bit >= 0; --bit) {
    acc = ctx.mul(acc, ctx.compose(acc, frob.get(width)));
    width *= 2;
    if ((m >> bit) & 1u) {
      acc = ctx.mul(acc, ctx.compose(r0, frob.get(width)));
      width += 1;
    }
  }
  return acc;
}

bool is_irreducible(const PrimeField& F, const FpPoly& f) {
  int d = f.degree();
  if (d < 1) fail(Errc::invalid_input, "irreducibility is defined for nonconstant polynomials");
  if (d == 1) return true;
  FpPoly mf = poly_make_monic(F, f);
  FpPoly der = poly_derivative(F, mf);
  if (poly_gcd(F, mf, der).degree() != 0) return false;
  MulContext ctx(F, mf);
  FrobeniusTable frob(ctx);
  const FpPoly x_red = ctx.reduce(FpPoly::x());
  for (unsigned ell : prime_divisors(static_cast<unsigned>(d))) {
    unsigned j = static_cast<unsigned>(d) / ell;
    FpPoly g = poly_gcd(F, poly_sub(F, frob.get(j), x_red), mf);
    if (g.degree() != 0) return false;
  }
  return frob.get(static_cast<unsigned>(d)) == x_red;
}

FpPoly find_irreducible(const PrimeField& F, unsigned n) {
  if (n == 0) fail(Errc::invalid_input, "degree must be positive");
  const std::uint64_t p = F.p();
  for (std::uint64_t idx = 0;; ++idx) {
    std::vector<Fp> c(n + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned j = 0; j < n && rest; ++j) {
      c[j] = rest % p;
      rest /= p;
    }
    if (rest) fail(Errc::scale_limit, "no irreducible found within the enumeration range");
    c[n] = 1;
    FpPoly f(std::move(c));
    if (is_irreducible(F, f)) return f;
  }
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
  if (bound == 0) fail(Errc::invalid_input, "rng bound must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t v = gen_();
    if (v < limit) return v % bound;
  }
}

namespace {

FpPoly random_poly_below(const PrimeField& F, unsigned deg_bound, Rng& rng) {
  std::vector<Fp> c(deg_bound);
  for (auto& v : c) v = rng.next_below(F.p());
  return FpPoly(std::move(c));
}

// Split a monic squarefree product of two irreducibles of equal degree n.
std::pair<FpPoly, FpPoly> equal_degree_split(const PrimeField& F, const FpPoly& f2n, unsigned n,
                                             Rng& rng) {
  MulContext ctx(F, f2n);
  FrobeniusTable frob(ctx);
  const unsigned d2 = static_cast<unsigned>(f2n.degree());
  for (int attempt = 0; attempt < 64; ++attempt) {
    FpPoly r = random_poly_below(F, d2, rng);
    if (r.degree() < 1) continue;
    FpPoly g = poly_gcd(F, r, f2n);
    if (g.degree() == 0) {
      FpPoly u = norm_form(ctx, frob, r, n);
      FpPoly s = ctx.pow_u64(u, (F.p() - 1) / 2);
      g = poly_gcd(F, poly_sub(F, s, FpPoly::one()), f2n);
    }
    if (g.degree() <= 0 || g.degree() == f2n.degree()) continue;
    if (g.degree() != static_cast<int>(n))
      fail(Errc::contract_violation, "transform output split into unequal degrees");
    FpPoly f1 = poly_make_monic(F, g);
    FpPoly q, rem;
    poly_divmod(F, f2n, f1, q, rem);
    if (!rem.is_zero()) fail(Errc::contract_violation, "inexact factor division");
    return {std::move(f1), std::move(q)};
  }
  fail(Errc::contract_violation, "no equal-degree splitter found");
}

bool lex_leading_le(const FpPoly& a, const FpPoly& b) {
  // Both monic of the same degree; compare coefficients from the top down.
  for (int i = a.degree(); i >= 0; --i) {
    Fp ca = a.coeff(static_cast<std::size_t>(i)), cb = b.coeff(static_cast<std::size_t>(i));
    if (ca != cb) return ca < cb;
  }
  return true;
}

SplitResult finish_two_factors(const PrimeField& F, const FpPoly& f2n, unsigned n, FpPoly f1,
                               FpPoly f2) {
  if (f1.degree() != static_cast<int>(n) || f2.degree() != static_cast<int>(n) ||
      !is_irreducible(F, f1) || !is_irreducible(F, f2) || poly_mul(F, f1, f2) != f2n)
    fail(Errc::contract_violation, "transform output is not a product of two irreducibles of half degree");
  if (!lex_leading_le(f1, f2)) std::swap(f1, f2);
  return {true, std::move(f1), std::move(f2)};
}

}  // namespace

SplitResult split_transform_output(const PrimeField& F, const FpPoly& f2n, unsigned n, Rng& rng,
                                   const SplitHint* hint) {
  if (n == 0 || f2n.degree() != static_cast<int>(2 * n) || !f2n.is_monic())
    fail(Errc::invalid_input, "expected a monic polynomial of degree 2n");
  // Repeated-root case: the transform ramified, the output is a square.
  FpPoly g0 = poly_gcd(F, f2n, poly_derivative(F, f2n));
  if (g0.degree() > 0) {
    if (g0.degree() != static_cast<int>(n) || poly_mul(F, g0, g0) != f2n || !is_irreducible(F, g0))
      fail(Errc::contract_violation, "repeated factor is not a half-degree irreducible");
    return {true, g0, g0};
  }
  if (hint && hint->parent && hint->parent->degree() == static_cast<int>(n)) {
    // The roots of the output generate a quadratic extension of F_p[y]/(parent)
    // exactly when the discriminant of the fiber quadratic is a non-square
    // there; its quadratic character is read off a prime-field norm.
    const FpPoly& parent = *hint->parent;
    Fp c0 = hint->kind == TransformKind::qhat
                ? Fp{1}
                : F.neg(F.mul(F.mul(4 % F.p(), hint->k), hint->k));
    FpPoly delta(std::vector<Fp>{c0, 0, 1});
    MulContext pctx(F, parent);
    FrobeniusTable pfrob(pctx);
    delta = pctx.reduce(delta);
    if (!delta.is_zero()) {
      FpPoly u = norm_form(pctx, pfrob, delta, n);
      if (u.degree() <= 0) {
        int chi = F.legendre(u.coeff(0));
        if (chi == -1) return {false, f2n, FpPoly::zero()};
        if (chi == 1) {
          auto [f1, f2] = equal_degree_split(F, f2n, n, rng);
          return finish_two_factors(F, f2n, n, std::move(f1), std::move(f2));
        }
      }
    }
    // Inconclusive hint; fall through to the direct route.
  }
  MulContext ctx(F, f2n);
  FrobeniusTable frob(ctx);
  const FpPoly x_red = ctx.reduce(FpPoly::x());
  if (frob.get(n) == x_red) {
    auto [f1, f2] = equal_degree_split(F, f2n, n, rng);
    return finish_two_factors(F, f2n, n, std::move(f1), std::move(f2));
  }
  // All irreducible factors would have degree dividing n otherwise, so the
  // only admissible outcome left is an irreducible of degree 2n.
  for (unsigned ell : prime_divisors(2 * n)) {
    unsigned j = 2 * n / ell;
    FpPoly g = poly_gcd(F, poly_sub(F, frob.get(j), x_red), f2n);
    if (g.degree() != 0) fail(Errc::contract_violation, "transform output has a proper small-degree factor");
  }
  if (frob.get(2 * n) != x_red) fail(Errc::contract_violation, "transform output is not irreducible of degree 2n");
  return {false, f2n, FpPoly::zero()};
}

namespace {

void parse_fail(std::string_view text) {
  fail(Errc::parse_error, "cannot parse polynomial: \"" + std::string(text) + "\"");
}

FpPoly parse_coeff_list(const PrimeField& F, std::string_view s, std::string_view orig) {
  std::vector<Fp> c;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? s.size() - pos : comma - pos);
    bool neg = false;
    std::size_t i = 0;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) neg = tok[i++] == '-';
    if (i >= tok.size()) parse_fail(orig);
    std::uint64_t v = 0;
    for (; i < tok.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(tok[i]))) parse_fail(orig);
      v = (v * 10 + static_cast<std::uint64_t>(tok[i] - '0')) % F.p();
    }
    c.push_back(neg ? F.neg(v) : v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return FpPoly(std::move(c));
}

}  // namespace

FpPoly parse_poly(const PrimeField& F, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) parse_fail(text);
  if (s.find('x') == std::string::npos && s.find('X') == std::string::npos &&
      s.find(',') != std::string::npos)
    return parse_coeff_list(F, s, text);
  if (s.find('x') == std::string::npos && s.find('X') == std::string::npos)
    return parse_coeff_list(F, s, text);

  std::vector<Fp> c;
  auto bump = [&](std::size_t deg, Fp v, bool neg) {
    if (c.size() <= deg) c.resize(deg + 1, 0);
    c[deg] = neg ? F.sub(c[deg], v) : F.add(c[deg], v);
  };
  std::size_t i = 0;
  while (i < s.size()) {
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    if (i >= s.size()) parse_fail(text);
    bool have_digits = false;
    std::uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = (v * 10 + static_cast<std::uint64_t>(s[i] - '0')) % F.p();
      ++i;
      have_digits = true;
    }
    if (i < s.size() && s[i] == '*') {
      if (!have_digits) parse_fail(text);
      ++i;
    }
    if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
      ++i;
      Fp coeff = have_digits ? v : 1;
      std::size_t deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) parse_fail(text);
        deg = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          deg = deg * 10 + static_cast<std::size_t>(s[i] - '0');
          if (deg > (1u << 20)) parse_fail(text);
          ++i;
        }
      }
      bump(deg, coeff, neg);
    } else {
      if (!have_digits) parse_fail(text);
      bump(0, v, neg);
    }
  }
  return FpPoly(std::move(c));
}

std::string format_poly(const FpPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Fp c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0) {
      out << c;
    } else {
      if (c != 1) out << c;
      out << 'x';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

std::string format_coeff_list(const FpPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out << ',';
    out << f.coeffs()[i];
  }
  return out.str();
}

}  // namespace iterpoly
