#include "hkquot/moduli_mirror.hpp"

#include <algorithm>

#include "hkquot/k3_involutions.hpp"
#include "hkquot/quotient_diamonds.hpp"

namespace hkq {

namespace {

void require_admissible(int N, int Nprime) {
  if (!is_admissible(N, Nprime)) throw InadmissiblePair(N, Nprime);
}

int half_exact(int numerator) {
  if (numerator % 2 != 0) throw DomainError("odd numerator " + std::to_string(numerator));
  return numerator / 2;
}

}  // namespace

std::vector<DimensionRow> deform_dims(int N, int Nprime) {
  require_admissible(N, Nprime);
  const int n = N, m = Nprime;
  return {
      {"(S,i)", 10 - n + m},
      {"(SxS,ixi)", 20 - 2 * n + 2 * m},
      {"Z_S", 20 - 2 * n + 2 * m + m * m},
      {"(S^[2],i^[2])", 10 - n + m},
      {"(SxS,ixi,sigma)", 10 - n + m},
      {"Y_S", half_exact(20 - 2 * n + m + m * m)},
  };
}

std::vector<DimensionRow> kahler_dims(int N, int Nprime) {
  require_admissible(N, Nprime);
  const int n = N, m = Nprime;
  return {
      {"Z_S", 20 + 2 * n - 2 * m + n * n},
      {"(S^[2],i^[2])", 11 + n - m},
      {"Y_S", half_exact(24 + 3 * n - 2 * m + n * n)},
  };
}

std::vector<DeformRelation> deform_relations(int N, int Nprime) {
  const auto d = deform_dims(N, Nprime);
  const int sxs = d[1].value, z = d[2].value, hilb = d[3].value, sxs_sigma = d[4].value,
            y = d[5].value;
  return {
      {"dim Def(Z_S) >= dim Def(SxS,ixi)", z >= sxs, z == sxs, Nprime == 0},
      {"dim Def(S^[2],i^[2]) = dim Def(SxS,ixi,sigma)", hilb == sxs_sigma, hilb == sxs_sigma,
       true},
      {"dim Def(Y_S) >= dim Def(S^[2],i^[2])", y >= hilb, y == hilb,
       Nprime == 0 || Nprime == 1},
      {"dim Def(Y_S) <= dim Def(Z_S)", y <= z, y == z, N == 10 && Nprime == 0},
  };
}

bool is_mirror(const CalabiYau4Diamond& a, const CalabiYau4Diamond& b, MirrorConvention conv) {
  const bool hodge = a.h11() == b.h31() && a.h31() == b.h11() && a.h22() == b.h22();
  if (conv == MirrorConvention::HodgeOnly) return hodge;
  return hodge && a.h21() == b.h21();
}

std::vector<std::pair<AdmissiblePair, AdmissiblePair>> mirror_scan_ys(MirrorConvention conv) {
  const auto& table = reference_ys_table();
  std::vector<std::pair<AdmissiblePair, AdmissiblePair>> out;
  for (const auto& a : table) {
    const CalabiYau4Diamond da{a.h11, a.h21, a.h31, a.h22};
    for (const auto& b : table) {
      const CalabiYau4Diamond db{b.h11, b.h21, b.h31, b.h22};
      if (!is_mirror(da, db, conv)) continue;
      AdmissiblePair pa{a.N, a.Nprime}, pb{b.N, b.Nprime};
      if (pb < pa) std::swap(pa, pb);
      out.emplace_back(pa, pb);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::pair<AdmissiblePair, bool>> zs_mirror_checks() {
  std::vector<std::pair<AdmissiblePair, bool>> out;
  for (const auto& row : reference_ys_table()) {
    const int n = row.N, m = row.Nprime;
    if (n > m || !is_admissible(m, n)) continue;
    out.push_back({{n, m}, is_mirror(zs_diamond(n, m), zs_diamond(m, n))});
  }
  return out;
}

OwReport ow_counterexample() {
  const int t11 = 2;
  const int fixed_surfaces = 2;
  return {t11 + fixed_surfaces, ys_diamond(10, 2).h31()};
}

}  // namespace hkq
