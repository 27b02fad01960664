#include "doctest.h"
#include "fp.hpp"

using namespace iterpoly;

TEST_CASE("prime validation") {
  CHECK_NOTHROW(PrimeField(3));
  CHECK_NOTHROW(PrimeField(10007));
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(91), Error);  // 7 * 13
}

TEST_CASE("field arithmetic basics") {
  PrimeField F(13);
  CHECK(F.add(7, 8) == 2);
  CHECK(F.sub(3, 8) == 8);
  CHECK(F.neg(0) == 0);
  CHECK(F.mul(7, 8) == 4);
  CHECK(F.pow(2, 12) == 1);
  CHECK(F.reduce(-1) == 12);
  for (Fp a = 1; a < 13; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
}

TEST_CASE("legendre symbol via small tables") {
  PrimeField F(7);
  // squares mod 7: {1, 2, 4}
  CHECK(F.legendre(0) == 0);
  CHECK(F.legendre(1) == 1);
  CHECK(F.legendre(2) == 1);
  CHECK(F.legendre(3) == -1);
  CHECK(F.legendre(4) == 1);
  CHECK(F.legendre(5) == -1);
  CHECK(F.legendre(6) == -1);
}

TEST_CASE("square roots") {
  PrimeField F7(7);
  CHECK(F7.sqrt(4) == 2);          // the smaller of {2, 5}
  CHECK_FALSE(F7.sqrt(3).has_value());
  CHECK(F7.sqrt(0) == 0);
  PrimeField F13(13);
  CHECK(F13.sqrt(12) == 5);  // 5^2 = 25 = 12, the other root is 8

  for (std::uint64_t p : {3ull, 5ull, 13ull, 17ull, 10007ull}) {
    PrimeField F(p);
    for (Fp a = 0; a < std::min<std::uint64_t>(p, 200); ++a) {
      auto r = F.sqrt(a);
      if (r) {
        CHECK(F.mul(*r, *r) == a);
        CHECK(*r <= p - *r);
      } else {
        CHECK(F.legendre(a) == -1);
      }
    }
  }
}

TEST_CASE("primality of machine words") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK(is_prime_u64((1ull << 61) - 1));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));        // Carmichael
  CHECK_FALSE(is_prime_u64(3215031751ull));
}
