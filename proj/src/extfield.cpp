#include "extfield.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace iterpoly {

namespace {

FpPoly validated_modulus(const PrimeField& F, unsigned n, FpPoly m) {
  if (n == 0) fail(Errc::invalid_input, "extension degree must be positive");
  if (m.degree() != static_cast<int>(n) || !m.is_monic())
    fail(Errc::invalid_modulus, "defining polynomial must be monic of degree n");
  if (n > 1 && !is_irreducible(F, m))
    fail(Errc::invalid_modulus, "defining polynomial is reducible: " + format_poly(m));
  return m;
}

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ExtField::ExtField(std::uint64_t p, unsigned n)
    : ExtField(p, n, n ? find_irreducible(PrimeField(p), n) : FpPoly::zero()) {}

ExtField::ExtField(std::uint64_t p, unsigned n, FpPoly modulus)
    : F_(p), n_(n), mod_(validated_modulus(F_, n, std::move(modulus))), red_(F_, mod_) {
  order_ = 1;
  for (unsigned i = 0; i < n_; ++i) order_ *= p;
  if (order_ <= std::numeric_limits<std::uint64_t>::max())
    order64_ = static_cast<std::uint64_t>(order_);
}

ExtElem ExtField::pad(const FpPoly& f) const {
  ExtElem e{std::vector<Fp>(n_, 0)};
  for (std::size_t i = 0; i < f.coeffs().size() && i < n_; ++i) e.c[i] = f.coeffs()[i];
  return e;
}

ExtElem ExtField::gen() const {
  if (n_ == 1) return pad(red_.reduce(FpPoly::x()));
  ExtElem e{std::vector<Fp>(n_, 0)};
  e.c[1] = 1;
  return e;
}

ExtElem ExtField::from_base(Fp v) const {
  ExtElem e{std::vector<Fp>(n_, 0)};
  e.c[0] = v % F_.p();
  return e;
}

ExtElem ExtField::from_poly(const FpPoly& f) const { return pad(red_.reduce(f)); }

bool ExtField::is_zero(const ExtElem& e) const {
  return std::all_of(e.c.begin(), e.c.end(), [](Fp v) { return v == 0; });
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
  ExtElem r{std::vector<Fp>(n_)};
  for (unsigned i = 0; i < n_; ++i) r.c[i] = F_.add(a.c[i], b.c[i]);
  return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
  ExtElem r{std::vector<Fp>(n_)};
  for (unsigned i = 0; i < n_; ++i) r.c[i] = F_.sub(a.c[i], b.c[i]);
  return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
  ExtElem r{std::vector<Fp>(n_)};
  for (unsigned i = 0; i < n_; ++i) r.c[i] = F_.neg(a.c[i]);
  return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
  return pad(red_.mul(FpPoly(a.c), FpPoly(b.c)));
}

ExtElem ExtField::mul_base(const ExtElem& a, Fp s) const {
  ExtElem r{std::vector<Fp>(n_)};
  for (unsigned i = 0; i < n_; ++i) r.c[i] = F_.mul(a.c[i], s);
  return r;
}

ExtElem ExtField::inv(const ExtElem& a) const {
  if (is_zero(a)) fail(Errc::invalid_input, "division by zero in the extension field");
  return pad(poly_invmod(F_, FpPoly(a.c), mod_));
}

ExtElem ExtField::pow(const ExtElem& a, const BigInt& e) const {
  if (e < 0) fail(Errc::invalid_input, "negative exponent");
  return pad(red_.pow(FpPoly(a.c), e));
}

ExtElem ExtField::pow_u64(const ExtElem& a, std::uint64_t e) const {
  return pad(red_.pow_u64(FpPoly(a.c), e));
}

ExtElem ExtField::eval(const FpPoly& f, const ExtElem& at) const {
  ExtElem acc = zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = mul(acc, at);
    acc.c[0] = F_.add(acc.c[0], f.coeffs()[i]);
    if (i == 0) break;
  }
  return acc;
}

ExtElem ExtField::elem_at(std::uint64_t index) const {
  ExtElem e{std::vector<Fp>(n_, 0)};
  for (unsigned j = 0; j < n_ && index; ++j) {
    e.c[j] = index % F_.p();
    index /= F_.p();
  }
  if (index) fail(Errc::invalid_input, "element index out of range");
  return e;
}

std::uint64_t ExtField::index_of(const ExtElem& e) const {
  std::uint64_t idx = 0;
  for (unsigned j = n_; j-- > 0;) {
    idx = idx * F_.p() + e.c[j];
    if (j == 0) break;
  }
  return idx;
}

ExtElem ExtField::primitive() const {
  if (!order64_) fail(Errc::scale_limit, "field too large for primitive-element search");
  const std::uint64_t group = *order64_ - 1;
  auto factors = prime_factors_u64(group);
  for (std::uint64_t idx = 1; idx < *order64_; ++idx) {
    ExtElem cand = elem_at(idx);
    bool ok = true;
    for (std::uint64_t q : factors) {
      ExtElem t = pow_u64(cand, group / q);
      if (t == one()) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  fail(Errc::invalid_input, "no primitive element found");  // unreachable for valid fields
}

std::string ExtField::elem_name(const ExtElem& e) const {
  std::ostringstream out;
  for (unsigned i = 0; i < n_; ++i) {
    if (i) out << ',';
    out << e.c[i];
  }
  return out.str();
}

namespace extpoly {

int degree(const ExtField& K, const ExtPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (!K.is_zero(f[i])) return static_cast<int>(i);
    if (i == 0) break;
  }
  return -1;
}

void trim(const ExtField& K, ExtPoly& f) {
  while (!f.empty() && K.is_zero(f.back())) f.pop_back();
}

ExtPoly from_base(const ExtField& K, const FpPoly& f) {
  ExtPoly out;
  out.reserve(f.coeffs().size());
  for (Fp c : f.coeffs()) out.push_back(K.from_base(c));
  return out;
}

ExtPoly mul(const ExtField& K, const ExtPoly& a, const ExtPoly& b) {
  if (a.empty() || b.empty()) return {};
  ExtPoly out(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = K.add(out[i + j], K.mul(a[i], b[j]));
  }
  trim(K, out);
  return out;
}

ExtPoly rem(const ExtField& K, const ExtPoly& a, const ExtPoly& b) {
  int db = degree(K, b);
  if (db < 0) fail(Errc::invalid_input, "polynomial division by zero");
  ExtPoly r = a;
  trim(K, r);
  ExtElem lead_inv = K.inv(b[static_cast<std::size_t>(db)]);
  while (degree(K, r) >= db) {
    std::size_t dr = static_cast<std::size_t>(degree(K, r));
    ExtElem c = K.mul(r[dr], lead_inv);
    std::size_t off = dr - static_cast<std::size_t>(db);
    for (std::size_t j = 0; j <= static_cast<std::size_t>(db); ++j)
      r[off + j] = K.sub(r[off + j], K.mul(c, b[j]));
    trim(K, r);
  }
  return r;
}

ExtPoly div_exact(const ExtField& K, const ExtPoly& a, const ExtPoly& b) {
  int db = degree(K, b);
  if (db < 0) fail(Errc::invalid_input, "polynomial division by zero");
  ExtPoly r = a;
  trim(K, r);
  int da = degree(K, r);
  if (da < db) {
    if (da >= 0) fail(Errc::invalid_input, "inexact polynomial division");
    return {};
  }
  ExtPoly quot(static_cast<std::size_t>(da - db) + 1, K.zero());
  ExtElem lead_inv = K.inv(b[static_cast<std::size_t>(db)]);
  while (degree(K, r) >= db) {
    std::size_t dr = static_cast<std::size_t>(degree(K, r));
    ExtElem c = K.mul(r[dr], lead_inv);
    std::size_t off = dr - static_cast<std::size_t>(db);
    quot[off] = c;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(db); ++j)
      r[off + j] = K.sub(r[off + j], K.mul(c, b[j]));
    trim(K, r);
  }
  if (!r.empty()) fail(Errc::invalid_input, "inexact polynomial division");
  return quot;
}

ExtPoly gcd(const ExtField& K, ExtPoly a, ExtPoly b) {
  trim(K, a);
  trim(K, b);
  while (degree(K, b) >= 0) {
    ExtPoly r = rem(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(K, a);
}

ExtPoly derivative(const ExtField& K, const ExtPoly& a) {
  if (a.size() <= 1) return {};
  ExtPoly out(a.size() - 1, K.zero());
  for (std::size_t i = 1; i < a.size(); ++i)
    out[i - 1] = K.mul_base(a[i], static_cast<Fp>(i % K.p()));
  trim(K, out);
  return out;
}

ExtPoly make_monic(const ExtField& K, const ExtPoly& a) {
  int d = degree(K, a);
  if (d < 0) return {};
  ExtPoly out = a;
  trim(K, out);
  ExtElem s = K.inv(out.back());
  for (auto& c : out) c = K.mul(c, s);
  return out;
}

ExtPoly powmod(const ExtField& K, const ExtPoly& base, const BigInt& e, const ExtPoly& mod) {
  ExtPoly result{K.one()};
  ExtPoly b = rem(K, base, mod);
  if (e == 0) return result;
  std::size_t nbits = boost::multiprecision::msb(e) + 1;
  for (std::size_t i = 0; i < nbits; ++i) {
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
      result = rem(K, mul(K, result, b), mod);
    if (i + 1 < nbits) b = rem(K, mul(K, b, b), mod);
  }
  return result;
}

}  // namespace extpoly

ExtElem find_root(const ExtField& K, const FpPoly& f, Rng& rng) {
  if (f.degree() < 1) fail(Errc::invalid_input, "root search needs a nonconstant polynomial");
  if (K.degree() % static_cast<unsigned>(f.degree()) != 0)
    fail(Errc::invalid_input, "polynomial degree does not divide the field degree");
  ExtPoly g = extpoly::make_monic(K, extpoly::from_base(K, f));
  const BigInt half = (K.order() - 1) / 2;
  while (extpoly::degree(K, g) > 1) {
    // (T + a)^((q-1)/2) - 1 separates the roots with probability about 1/2.
    std::uint64_t bound = K.order_u64() ? *K.order_u64() : std::numeric_limits<std::uint64_t>::max();
    ExtElem a = K.elem_at(rng.next_below(bound));
    ExtPoly shift{a, K.one()};
    ExtPoly s = extpoly::powmod(K, shift, half, g);
    if (s.empty()) continue;
    s[0] = K.sub(s[0], K.one());
    ExtPoly d = extpoly::gcd(K, s, g);
    int dd = extpoly::degree(K, d);
    int dg = extpoly::degree(K, g);
    if (dd <= 0 || dd >= dg) continue;
    g = 2 * dd <= dg ? std::move(d) : extpoly::div_exact(K, g, d);
  }
  if (extpoly::degree(K, g) != 1) fail(Errc::invalid_input, "root reduction failed");
  ExtPoly m = extpoly::make_monic(K, g);
  return K.neg(m[0]);
}

}  // namespace iterpoly
