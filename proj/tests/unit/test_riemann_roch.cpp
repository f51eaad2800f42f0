#include "doctest.h"

#include <random>

#include "hkquot/riemann_roch.hpp"

using namespace hkq;

using Gram = std::vector<std::vector<std::int64_t>>;

TEST_CASE("lattices and pairing") {
  const GramLattice deg2(Gram{{2}});
  CHECK(pair(deg2, {{1}}, {{1}}) == 2);
  const GramLattice u(Gram{{0, 1}, {1, -2}});
  const DivisorClass H{{4, 2}};
  CHECK(pair(u, H, H) == 8);
  const GramLattice u2(Gram{{0, 2}, {2, 0}});
  CHECK(pair(u2, {{1, 1}}, {{1, 1}}) == 4);

  CHECK_THROWS_AS(pair(u, {{1}}, H), std::invalid_argument);
  CHECK_THROWS_AS(GramLattice(Gram{{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GramLattice(Gram{{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(GramLattice(Gram{{1}}), DomainError);
  CHECK(GramLattice(Gram{{1}}, true).rank() == 1);
}

TEST_CASE("chi_c1_zero") {
  CHECK(chi_c1_zero(0, 0, 2) == Rational(2));
  CHECK(chi_c1_zero(0, 0, 4) == Rational(4));
  CHECK(chi_c1_zero(24, 96, 4) == Rational(9));
}

TEST_CASE("chi_c1_zero on S x S matches Kunneth") {
  // D = x [x] 1 + 1 [x] y: D^4 = 6 x^2 y^2, D^2.c2 = 24 (x^2 + y^2), chi(O) = 4.
  for (std::int64_t x2 = -4; x2 <= 12; x2 += 2)
    for (std::int64_t y2 = -4; y2 <= 12; y2 += 2) {
      const Rational rr = chi_c1_zero(6 * x2 * y2, 24 * (x2 + y2), 4);
      CHECK(rr == Rational(chi_box(chi_k3_surface(x2), chi_k3_surface(y2))));
    }
}

TEST_CASE("chi on K3 and K3^[2]-type") {
  CHECK(chi_k3type(2) == Rational(6));
  CHECK(chi_k3type(0) == Rational(3));
  CHECK(chi_k3type(8) == Rational(21));
  CHECK(chi_k3type(-2) == Rational(1));
  CHECK(chi_k3_surface(2) == 3);
  CHECK(chi_k3_surface(0) == 2);
  CHECK(chi_k3_surface(8) == 6);
  CHECK_THROWS_AS(chi_k3_surface(3), DomainError);
  CHECK(chi_box(3, 2) == 6);
  CHECK(chi_box(2, 2) == 4);
  CHECK(chi_box(0, 7) == 0);
  for (std::int64_t x = -10; x <= 10; x += 2)
    CHECK(chi_box(chi_k3_surface(x), 2) == chi_box(chi_k3_surface(x), chi_k3_surface(0)));
}

TEST_CASE("S^[2] route agrees with S x S through the lift formula") {
  // chi(D_S2) from chi(D [x] D) on S x S, with D restricted to the diagonal.
  for (std::int64_t q = -20; q <= 40; q += 2)
    CHECK(chi_k3type(q) == chi_lift(chi_k3_surface(q) * chi_k3_surface(q), 4 * q, 4, 3));
}

TEST_CASE("restriction squares") {
  CHECK(sq_restriction_product(6, 6) == 72);
  CHECK(sq_restriction_product(8, 4) == 64);
  CHECK(sq_restriction_product(0, 5) == 0);
  CHECK(sq_restriction_diagonal(2) == 8);
  CHECK(sq_restriction_diagonal_quotient(2) == 4);
  CHECK(2 * sq_restriction_diagonal_quotient(2) == 8);
  CHECK(sq_restriction_diagonal(0) == 0);
  CHECK(sq_restriction_diagonal(8) == 32);
}

TEST_CASE("chi_lift") {
  CHECK(chi_lift(9, 72, 4, 2) == Rational(9));
  CHECK(chi_lift(4, 32, 4, 2) == Rational(4));
  CHECK(chi_lift(0, 0, 2, 2) == Rational(1));
  CHECK(chi_lift(Rational(1, 2), 1, 0, 0) == Rational(5, 16));
}

TEST_CASE("h0 formulas") {
  CHECK(h0_hilb2(2) == 6);
  CHECK(h0_hilb2(4) == 10);
  CHECK(h0_hilb2(8) == 21);
  CHECK_THROWS_AS(h0_hilb2(3), DomainError);
  CHECK_THROWS_AS(h0_hilb2(-2), DomainError);
  CHECK(h0_Z(3, 72) == Rational(9));
  CHECK(h0_Z(4, 128) == Rational(16));
  CHECK(h0_Z(0, 0) == Rational(0));
  CHECK(h0_Y(3, 72, 8) == Rational(6));
  CHECK(h0_Y(4, 128, 16) == Rational(10));
  CHECK(h0_Y(0, 0, 0) == Rational(1));
  // Back-solved inputs for the U(2) family, recomputed from the lattice.
  CHECK(sq_restriction_product(8, 8) == 128);
  CHECK(sq_restriction_diagonal(4) == 16);
}

TEST_CASE("the two displayed routes for h0 on Y agree") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> h(0, 200), s(0, 5000);
  for (int i = 0; i < 1000; ++i) {
    const auto a = h(rng), b = s(rng), c = s(rng);
    CHECK(h0_Y(a, b, c) == chi_lift(h0_Z(a, b), c, 2, 2));
  }
}

TEST_CASE("family fixtures recompute the transcribed values") {
  const auto fams = family_fixtures();
  REQUIRE(fams.size() == 3);
  const auto& deg2 = fams[0];
  const auto& u2 = fams[1];
  const auto& u = fams[2];
  CHECK(deg2.name == "deg2");
  CHECK(u2.name == "U2");
  CHECK(u.name == "U");

  CHECK(deg2.value("hSigma").expected == Rational(72));
  CHECK(u.value("chi(F_Z)").expected == Rational(4));
  CHECK(u2.value("chi(l_Z)").expected == Rational(2));

  for (const auto& fam : fams)
    for (const auto& v : fam.values) {
      INFO(fam.name, " ", v.key);
      if (v.hard) CHECK(v.match());
    }

  // Known tensions: recorded with their recomputed values, never asserted equal.
  CHECK_FALSE(u2.value("chi(l_Z)").hard);
  CHECK_FALSE(u2.value("chi(l_Y)").hard);
  CHECK(u2.value("chi(l_Z)").recomputed == Rational(4));
  CHECK(u2.value("chi(l_Y)").recomputed == Rational(3));
  CHECK_THROWS_AS(u2.value("nope"), std::out_of_range);
}

TEST_CASE("lattice helpers") {
  const GramLattice u(Gram{{0, 1}, {1, -2}});
  const DivisorClass F{{1, 0}}, O{{0, 1}};
  const std::vector<DivisorClass> fixed{O, F * 6 + O * 3};
  CHECK(chi_product_class(u, F, F) == 4);
  CHECK(sigma_sq_product(u, F, F, fixed) == 32);
  CHECK(chi_on_Z(u, F, F, fixed) == Rational(4));
  CHECK(chi_on_Y(u, F, fixed) == Rational(3));
  CHECK(chi_on_hilb2(u, F) == Rational(3));
  CHECK(chi_on_hilb2(u, F * 4 + O * 2) == Rational(21));
}
