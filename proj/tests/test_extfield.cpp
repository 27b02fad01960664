#include "doctest.h"
#include "extfield.hpp"

using namespace iterpoly;

TEST_CASE("context construction") {
  ExtField K1(7, 1);
  CHECK(K1.modulus() == FpPoly::x());  // the first monic linear polynomial
  ExtField K2(7, 2);
  CHECK(K2.modulus() == FpPoly::from_ints(K2.base(), {1, 0, 1}));
  CHECK(*K2.order_u64() == 49);
  CHECK_THROWS_AS(ExtField(7, 2, FpPoly::from_ints(PrimeField(7), {-1, 0, 1})), Error);
  CHECK_THROWS_AS(ExtField(7, 0), Error);
  CHECK_THROWS_AS(ExtField(7, 2, FpPoly::from_ints(PrimeField(7), {1, 1})), Error);  // wrong degree
}

TEST_CASE("element arithmetic") {
  ExtField K(7, 2);  // F_49 = F_7[x]/(x^2+1)
  ExtElem i = K.gen();
  CHECK(K.mul(i, i) == K.from_base(6));  // x^2 = -1
  for (std::uint64_t idx = 1; idx < 49; ++idx) {
    ExtElem e = K.elem_at(idx);
    CHECK(K.mul(e, K.inv(e)) == K.one());
    CHECK(K.index_of(e) == idx);
  }
  CHECK_THROWS_AS(K.inv(K.zero()), Error);
  // Frobenius fixes exactly the prime subfield.
  unsigned fixed = 0;
  for (std::uint64_t idx = 0; idx < 49; ++idx)
    if (K.pow_u64(K.elem_at(idx), 7) == K.elem_at(idx)) ++fixed;
  CHECK(fixed == 7);
}

TEST_CASE("polynomial evaluation in the extension") {
  ExtField K(7, 2);
  const PrimeField& F = K.base();
  // The defining polynomial vanishes at the generator.
  CHECK(K.is_zero(K.eval(K.modulus(), K.gen())));
  FpPoly f = FpPoly::from_ints(F, {3, 0, 1});  // x^2+3
  ExtElem v = K.eval(f, K.gen());
  CHECK(v == K.from_base(2));  // -1 + 3
}

TEST_CASE("primitive elements") {
  CHECK(ExtField(5, 1).primitive() == ExtField(5, 1).from_base(2));
  CHECK(ExtField(7, 1).primitive() == ExtField(7, 1).from_base(3));
  CHECK(ExtField(3, 1).primitive() == ExtField(3, 1).from_base(2));
  ExtField K(7, 2);
  ExtElem a = K.primitive();
  // Multiplicative order is exactly 48.
  ExtElem cur = K.one();
  unsigned order = 0;
  do {
    cur = K.mul(cur, a);
    ++order;
  } while (!(cur == K.one()));
  CHECK(order == 48);
}

TEST_CASE("extension-coefficient polynomial arithmetic") {
  ExtField K(5, 2);
  Rng rng(31);
  auto rand_elem = [&] { return K.elem_at(rng.next_below(*K.order_u64())); };
  for (int it = 0; it < 10; ++it) {
    ExtPoly a(4, K.zero()), b(3, K.zero());
    for (auto& c : a) c = rand_elem();
    for (auto& c : b) c = rand_elem();
    extpoly::trim(K, a);
    extpoly::trim(K, b);
    if (extpoly::degree(K, b) < 1) continue;
    ExtPoly prod = extpoly::mul(K, a, b);
    ExtPoly r = extpoly::rem(K, prod, b);
    CHECK(extpoly::degree(K, r) < 0);  // b divides a*b exactly
    CHECK(extpoly::degree(K, extpoly::div_exact(K, prod, b)) == extpoly::degree(K, a));
  }
}

TEST_CASE("root finding in towers") {
  PrimeField F(7);
  Rng rng(1234);
  // Roots of an irreducible quadratic live in the degree-2 and degree-4 fields.
  FpPoly f = find_irreducible(F, 2);
  for (unsigned deg : {2u, 4u}) {
    ExtField K(7, deg);
    ExtElem r = find_root(K, f, rng);
    CHECK(K.is_zero(K.eval(f, r)));
  }
  FpPoly g = find_irreducible(F, 3);
  ExtField K3(7, 3);
  ExtElem r3 = find_root(K3, g, rng);
  CHECK(K3.is_zero(K3.eval(g, r3)));
  CHECK_THROWS_AS(find_root(K3, f, rng), Error);  // 2 does not divide 3
}
