#include "doctest.h"
#include "gaussian.hpp"

using namespace iterpoly;

TEST_CASE("gaussian integer arithmetic") {
  GaussianInt a{3, -2}, b{-1, 4};
  CHECK((a + b) == GaussianInt{2, 2});
  CHECK((a - b) == GaussianInt{4, -6});
  CHECK((a * b) == GaussianInt{5, 14});
  CHECK(a.norm() == 13);
  CHECK(gauss_pow(GaussianInt{1, 1}, 2) == GaussianInt{0, 2});
  CHECK(gauss_pow(GaussianInt{1, 2}, 0) == GaussianInt{1, 0});
}

TEST_CASE("valuation at 1+i") {
  // (1+i)^2 = 2i, so the cofactor of 2i is exactly 1.
  auto v = one_plus_i_valuation(GaussianInt{0, 2});
  CHECK(v.e == 2);
  CHECK(v.cofactor == GaussianInt{1, 0});
  v = one_plus_i_valuation(GaussianInt{1, 2});
  CHECK(v.e == 0);
  CHECK(v.cofactor == GaussianInt{1, 2});
  v = one_plus_i_valuation(GaussianInt{-4, 4});
  CHECK(v.e == 5);
  CHECK(v.cofactor.norm() == 1);
  CHECK_THROWS_AS(one_plus_i_valuation(GaussianInt{0, 0}), Error);

  // Reconstruction: (1+i)^e * cofactor returns the input.
  Rng rng(8);
  for (int it = 0; it < 200; ++it) {
    GaussianInt z{static_cast<long long>(rng.next_below(4001)) - 2000,
                  static_cast<long long>(rng.next_below(4001)) - 2000};
    if (z.is_zero()) continue;
    auto val = one_plus_i_valuation(z);
    CHECK(val.cofactor.norm() % 2 == 1);
    CHECK(gauss_pow(GaussianInt{1, 1}, val.e) * val.cofactor == z);
  }
}

TEST_CASE("base curve point counts") {
  CHECK(base_curve_order(5, 1) == 4);
  CHECK(base_curve_order(7, 1) == 8);
  CHECK(base_curve_order(13, 1) == 20);
}

TEST_CASE("frobenius element") {
  CHECK(frobenius_element(5) == GaussianInt{1, 2});
  CHECK_THROWS_AS(frobenius_element(7), Error);
  // Independent count for p = 13: quadratic residues mod 13 applied to x^3+x.
  {
    std::uint64_t p = 13, n = 1;
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t t = (x * x % p * x + x) % p;
      if (t == 0) { n += 1; continue; }
      bool sq = false;
      for (std::uint64_t y = 1; y <= p / 2; ++y)
        if (y * y % p == t) sq = true;
      if (sq) n += 2;
    }
    CHECK(n == 20);
    GaussianInt pi = frobenius_element(13);
    CHECK(2 * pi.re == BigInt(13) + 1 - n);
    CHECK(pi.re * pi.re + pi.im * pi.im == 13);
    CHECK(pi.im > 0);
    CHECK(pi == GaussianInt{-3, 2});
  }
}

TEST_CASE("ordinary valuation levels") {
  auto v0 = ordinary_valuation(5, 1, 0);
  CHECK(v0.e == 2);  // pi - 1 = 2i
  auto v1 = ordinary_valuation(5, 1, 1);
  CHECK(v1.e == 5);  // pi^2 - 1 = -4 + 4i
  auto v2 = ordinary_valuation(5, 1, 2);
  auto v3 = ordinary_valuation(5, 1, 3);
  CHECK(v3.e == v2.e + 2);
  // The factorization is exact and the cofactor has odd norm.
  GaussianInt z = gauss_pow(frobenius_element(5), 2) - GaussianInt{1, 0};
  CHECK(gauss_pow(GaussianInt{1, 1}, v1.e) * v1.cofactor == z);
  CHECK(v1.cofactor.norm() % 2 == 1);
  CHECK_THROWS_AS(ordinary_valuation(7, 1, 0), Error);
}

TEST_CASE("supersingular valuation towers") {
  CHECK(supersingular_valuation(7, 1, 1).e == 3);   // -8
  CHECK(supersingular_valuation(7, 1, 2).e == 4);   // 48
  CHECK(supersingular_valuation(11, 1, 1).e == 2);  // -12
  auto v = supersingular_valuation(7, 1, 1);
  CHECK(v.odd_cofactor == -1);
  BigInt check = v.odd_cofactor;
  for (unsigned i = 0; i < v.e; ++i) check *= 2;
  CHECK(check == -8);
  CHECK_THROWS_AS(supersingular_valuation(5, 1, 1), Error);
  CHECK_THROWS_AS(supersingular_valuation(7, 1, 0), Error);
}
