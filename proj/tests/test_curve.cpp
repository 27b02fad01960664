#include "doctest.h"
#include "curve.hpp"
#include "gaussian.hpp"

using namespace iterpoly;

TEST_CASE("group law identities") {
  ExtField K(5, 1);
  auto pts = enumerate_points(K, 1, 1 << 20);
  CHECK(pts.size() == 4);  // matches the brute-force order
  for (const auto& P : pts) {
    CHECK(ec_add(K, 1, P, CurvePoint::id()) == P);
    CHECK(ec_add(K, 1, P, ec_neg(K, P)) == CurvePoint::id());
  }
  // (0,0) is 2-torsion.
  CurvePoint zero = CurvePoint::affine(K.zero(), K.zero());
  CHECK(ec_double(K, 1, zero) == CurvePoint::id());
  // Associativity on the full group.
  for (const auto& P : pts)
    for (const auto& Q : pts)
      for (const auto& R : pts)
        CHECK(ec_add(K, 1, ec_add(K, 1, P, Q), R) == ec_add(K, 1, P, ec_add(K, 1, Q, R)));
  // Points must lie on the curve.
  CHECK_THROWS_AS(ec_add(K, 1, CurvePoint::affine(K.from_base(1), K.from_base(1)),
                         CurvePoint::id()),
                  Error);
}

TEST_CASE("curve orders by brute force") {
  CHECK(curve_order(ExtField(5, 1), 1, 1 << 20) == 4);
  CHECK(curve_order(ExtField(7, 1), 1, 1 << 20) == 8);
  CHECK(curve_order(ExtField(7, 2), 1, 1 << 20) == 64);
  CHECK_THROWS_AS(curve_order(ExtField(7, 2), 1, 10), Error);  // cap
}

TEST_CASE("isogeny pair splits doubling") {
  for (std::uint64_t p : {5ull, 7ull, 13ull, 17ull}) {
    ExtField K(p, 1);
    const PrimeField& F = K.base();
    auto pts = enumerate_points(K, 1, 1 << 20);
    for (Fp k = 1; k < p; ++k) {
      if (F.legendre(k) != 1) {
        CHECK_THROWS_AS(two_isogeny(K, k, CurvePoint::id()), Error);
        continue;
      }
      CHECK(two_isogeny(K, k, CurvePoint::id()) == CurvePoint::id());
      CHECK(two_isogeny(K, k, CurvePoint::affine(K.zero(), K.zero())) == CurvePoint::id());
      CHECK(two_isogeny_dual(K, k, CurvePoint::id()) == CurvePoint::id());
      Fp a_k = F.neg(F.mul(F.mul(4 % p, k), k));
      for (const auto& P : pts) {
        CurvePoint img = two_isogeny(K, k, P);
        CHECK(on_curve(K, a_k, img));
        CHECK(two_isogeny_dual(K, k, img) == ec_double(K, 1, P));
      }
    }
  }
}

TEST_CASE("isogeny rejects points off the source curve") {
  ExtField K(13, 1);
  CurvePoint bogus = CurvePoint::affine(K.from_base(2), K.from_base(1));
  if (!on_curve(K, 1, bogus)) CHECK_THROWS_AS(two_isogeny(K, 1, bogus), Error);
}
