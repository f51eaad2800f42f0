#include "doctest.h"

#include "hkquot/quotient_diamonds.hpp"
#include "oracles.hpp"

using namespace hkq;

namespace {

oracle::Compact compact(const CalabiYau4Diamond& d) {
  return {d.h11(), d.h21(), d.h31(), d.h22()};
}

}  // namespace

TEST_CASE("cy_general and k3type_t") {
  CHECK(cy_general({3, 2, 4, 54}, {2, 1, 0, 12}) == CalabiYau4Diamond(5, 3, 4, 66));
  CHECK(k3type_t(21) == InvariantCohomology{21, 0, 0, 232});
  CHECK(k3type_t(0) == InvariantCohomology{0, 0, 21, 232});
  CHECK(k3type_t(11) == InvariantCohomology{11, 0, 10, 122});
  CHECK_THROWS_AS(k3type_t(22), DomainError);
  CHECK_THROWS_AS(k3type_t(-1), DomainError);
}

TEST_CASE("beauville_be") {
  const auto be = beauville_be(1, 0, 45);
  CHECK(be.b == 1);
  CHECK(be.e == 100);
  CHECK(be.consistent);
  CHECK_FALSE(beauville_be(10, 0, 50).consistent);
  CHECK_THROWS_AS(cy_k3type(10, 0, 50), DomainError);
}

TEST_CASE("Y_S closed form matches the tabulated rows") {
  const auto rows = oracle::read_appendix_csv(HKQUOT_FIXTURE_DIR "/appendix_ys.csv");
  REQUIRE(rows.size() == 65);
  for (const auto& r : rows)
    CHECK(compact(ys_diamond(r.N, r.Np)) == oracle::Compact{r.h11, r.h21, r.h31, r.h22});
  CHECK(ys_diamond(1, 10) == CalabiYau4Diamond(4, 10, 64, 296));
  CHECK(ys_diamond(3, 3) == CalabiYau4Diamond(18, 9, 13, 150));
  CHECK(ys_diamond(10, 0) == CalabiYau4Diamond(77, 0, 0, 352));
  CHECK(ys_diamond(0, 0) == CalabiYau4Diamond(12, 0, 10, 132));
  CHECK_THROWS_AS(ys_diamond(5, 9), InadmissiblePair);
}

TEST_CASE("Y_S: closed form, K3^[2]-type formula and assembly agree with the hand oracle") {
  for (const auto& inv : enumerate_admissible()) {
    const auto expected = oracle::ys_by_hand(inv.N, inv.Nprime);
    CHECK(compact(ys_diamond(inv.N, inv.Nprime)) == expected);
    CHECK(compact(ys_assembled(inv)) == expected);
    CHECK(compact(cy_k3type(inv.r + 1, inv.N * inv.Nprime,
                            inv.Nprime * (inv.Nprime - 1) / 2)) == expected);
  }
  CHECK(ys_assembled(two_elliptic()) == ys_diamond(2, 2));
}

TEST_CASE("Z_S: closed form and assembly agree with the hand oracle") {
  for (const auto& inv : enumerate_admissible()) {
    const auto expected = oracle::zs_by_hand(inv.N, inv.Nprime);
    CHECK(compact(zs_diamond(inv.N, inv.Nprime)) == expected);
    CHECK(compact(zs_assembled(inv)) == expected);
  }
  CHECK(zs_diamond(0, 0) == CalabiYau4Diamond(20, 0, 20, 204));
  CHECK(zs_assembled(two_elliptic()) == CalabiYau4Diamond(24, 8, 24, 220));
  CHECK(product_invariant_t(10) == InvariantCohomology{20, 0, 20, 204});
}

TEST_CASE("CY4 h22 relation holds for Y_S, Z_S and the double EPW sextic") {
  auto relation = [](const CalabiYau4Diamond& d) {
    return d.h22() == 44 + 4 * d.h11() - 2 * d.h21() + 4 * d.h31();
  };
  for (const auto& inv : enumerate_admissible()) {
    CHECK(relation(ys_diamond(inv.N, inv.Nprime)));
    CHECK(relation(zs_diamond(inv.N, inv.Nprime)));
  }
  CHECK(relation(epw_diamond()));
}

TEST_CASE("Euler number of the fixed locus on S^[2]") {
  for (const auto& inv : enumerate_admissible()) {
    if (inv.N == 0) continue;
    int chi = 0;
    for (const auto& s : fixed_surfaces_on_hilb2(inv)) chi += s.euler();
    CHECK(chi == 2 * (inv.r * inv.r - 19 * inv.r + 96));
    const auto f = sum_surface_hodge(fixed_surfaces_on_hilb2(inv));
    const int t = inv.r + 1;
    CHECK(2 * f.b - 4 * f.c + 2 * f.d + f.e == 2 * t * t - 42 * t + 232);
  }
}

TEST_CASE("Kummer quotients") {
  CHECK(kummer_t() == InvariantCohomology{3, 2, 4, 54});
  const auto ks = kummer_diamonds();
  REQUIRE(ks.size() == 3);
  CHECK(ks[1].match());
  CHECK(ks[1].recomputed == CalabiYau4Diamond(6, 4, 4, 68));
  CHECK(ks[2].match());
  CHECK(ks[2].recomputed == CalabiYau4Diamond(5, 3, 4, 66));
  // Y_1: the tabulated value is kept; recomputation differs in h22 only.
  CHECK(ks[0].tabulated == CalabiYau4Diamond(9, 8, 5, 75));
  CHECK(ks[0].recomputed.h11() == 9);
  CHECK(ks[0].recomputed.h21() == 8);
  CHECK(ks[0].recomputed.h31() == 5);
  CHECK(ks[0].recomputed.h22() == 76);
}

TEST_CASE("double EPW sextic") {
  CHECK(epw_fixed_surface() == SurfaceHodge(1, 0, 45, 100));
  CHECK(epw_diamond() == CalabiYau4Diamond(2, 0, 65, 312));
  CHECK(epw_diamond() == cy_k3type(1, 0, 45));
  CHECK(k3type_t(1).t31 + 45 == 65);
  CHECK(k3type_t(1).t22 + 100 == 312);
}

TEST_CASE("Picard rank and branch classes") {
  for (const auto& inv : enumerate_admissible()) {
    if (inv.N == 0) continue;
    CHECK(ys_picard_rank(inv.N, inv.Nprime) == ys_diamond(inv.N, inv.Nprime).h11());
  }
  CHECK_THROWS_AS(ys_picard_rank(0, 0), DomainError);

  const auto bc = ys_branch_classes(3, 1);  // r = 12, k = 2
  const int rank = ys_picard_rank(3, 1);
  CHECK(static_cast<int>(bc.basis.size()) == rank);
  CHECK(bc.basis[12] == "E_Delta");
  CHECK(bc.b_sigma[12] == 1);
  CHECK(bc.b_sigma[13] == 1);
  CHECK(bc.b_iota[12] == 0);
  int iota_terms = 0, sum_twos = 0;
  for (int i = 0; i < rank; ++i) {
    iota_terms += bc.b_iota[i];
    CHECK(bc.b_sum[i] == bc.b_iota[i] + bc.b_sigma[i]);
    if (bc.b_sum[i] == 2) ++sum_twos;
    if (i < 12) CHECK(bc.b_sum[i] == 0);
  }
  // E_{S/iota}, E_CxC, 2 E_CxR, 2 E_RxR, 1 E_RiRj.
  CHECK(iota_terms == 7);
  CHECK(sum_twos == 1);
}
