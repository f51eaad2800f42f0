#include "hkquot/quotient_diamonds.hpp"

#include <string>

namespace hkq {

namespace {

int half_exact(int numerator, const char* what) {
  if (numerator % 2 != 0)
    throw DomainError(std::string(what) + ": odd numerator " + std::to_string(numerator));
  return numerator / 2;
}

void require_admissible(int N, int Nprime) {
  if (!is_admissible(N, Nprime)) throw InadmissiblePair(N, Nprime);
}

}  // namespace

CalabiYau4Diamond cy_general(const InvariantCohomology& t, const FixedLocusHodge& f) {
  return {t.t11 + f.b, t.t21 + f.c, t.t31 + f.d, t.t22 + f.e};
}

InvariantCohomology k3type_t(int t11) {
  if (t11 < 0 || t11 > 21)
    throw DomainError("t11 = " + std::to_string(t11) + " outside [0, 21]");
  return {t11, 0, 21 - t11, 232 + t11 * t11 - 21 * t11};
}

BeauvilleCounts beauville_be(int t11, int c, int d) {
  const int b = half_exact(112 - 21 * t11 + 2 * c - 2 * d + t11 * t11,
                           "inconsistent (t11, c, d)");
  const int e = 120 - 21 * t11 + 2 * c + t11 * t11;
  return {b, e, b >= 0 && e >= 0};
}

CalabiYau4Diamond cy_k3type(int t11, int c, int d) {
  if (t11 < 0 || t11 > 21)
    throw DomainError("t11 = " + std::to_string(t11) + " outside [0, 21]");
  const auto be = beauville_be(t11, c, d);
  if (!be.consistent)
    throw DomainError("(t11, c, d) = (" + std::to_string(t11) + ", " + std::to_string(c) +
                      ", " + std::to_string(d) + ") forces b = " + std::to_string(be.b) +
                      " < 0");
  const int h11 = half_exact(112 - 19 * t11 + 2 * c - 2 * d + t11 * t11, "h11");
  return {h11, c, 21 - t11 + d, 352 + 2 * t11 * t11 - 42 * t11 + 2 * c};
}

CalabiYau4Diamond ys_diamond(int N, int Nprime) {
  require_admissible(N, Nprime);
  const int n = N, m = Nprime;
  return {half_exact(24 + 3 * n - 2 * m + n * n, "h11(Y_S)"), n * m,
          half_exact(20 - 2 * n + m + m * m, "h31(Y_S)"),
          132 + 2 * n - 2 * m + 2 * n * n - 2 * n * m + 2 * m * m};
}

CalabiYau4Diamond zs_diamond(int N, int Nprime) {
  require_admissible(N, Nprime);
  const int n = N, m = Nprime;
  return {20 + 2 * n - 2 * m + n * n, 2 * n * m, 20 - 2 * n + 2 * m + m * m,
          204 + 4 * n * n - 4 * n * m + 4 * m * m};
}

CalabiYau4Diamond ys_assembled(const NikulinInvariants& inv) {
  const auto fixed = fixed_surfaces_on_hilb2(inv);
  return cy_general(k3type_t(t11_natural(inv)), sum_surface_hodge(fixed));
}

InvariantCohomology product_invariant_t(int r) {
  return {2 * r, 0, 40 - 2 * r, 2 * r * r - 40 * r + 404};
}

CalabiYau4Diamond zs_assembled(const NikulinInvariants& inv) {
  const auto fixed = fixed_surfaces_on_SxS(inv);
  return cy_general(product_invariant_t(inv.r), sum_surface_hodge(fixed));
}

InvariantCohomology kummer_t() { return {3, 2, 4, 54}; }

std::vector<KummerQuotient> kummer_diamonds() {
  const SurfaceHodge plane = surfaces::projective_plane();
  const SurfaceHodge sym2 = surfaces::elliptic_sym2();
  const SurfaceHodge square = surfaces::elliptic_product();
  // E x P^1 blown up in nine points.
  const SurfaceHodge blown_up{1, 1, 0, 11};

  auto make = [](int index, std::vector<std::string> names, std::vector<SurfaceHodge> fixed,
                 CalabiYau4Diamond tabulated) {
    const auto recomputed = cy_general(kummer_t(), sum_surface_hodge(fixed));
    return KummerQuotient{index, std::move(names), std::move(fixed), tabulated, recomputed};
  };

  return {
      make(1, {"P^2", "Sym^2 E'", "Sym^2 E'", "Sym^2 E'", "E' x E'", "Bl_9(E x P^1)"},
           {plane, sym2, sym2, sym2, square, blown_up}, {9, 8, 5, 75}),
      make(2, {"P^2", "Sym^2 E'", "Bl_9(E x P^1)"}, {plane, sym2, blown_up}, {6, 4, 4, 68}),
      make(3, {"P^2", "Bl_9(E x P^1)"}, {plane, blown_up}, {5, 3, 4, 66}),
  };
}

SurfaceHodge epw_fixed_surface() { return {1, 0, 45, 100}; }

CalabiYau4Diamond epw_diamond() {
  const std::vector<SurfaceHodge> fixed{epw_fixed_surface()};
  return cy_general(k3type_t(1), sum_surface_hodge(fixed));
}

int ys_picard_rank(int N, int Nprime) {
  if (N == 0)
    throw DomainError("the NS(Y_S) basis needs a fixed curve; N = 0 is unsupported");
  const auto inv = from_NN(N, Nprime);
  const int k = inv.k;
  return inv.r + 3 + 2 * k + k * (k - 1) / 2;
}

BranchClasses ys_branch_classes(int N, int Nprime) {
  const int rank = ys_picard_rank(N, Nprime);
  const auto inv = from_NN(N, Nprime);
  const int r = inv.r, k = inv.k;

  BranchClasses out;
  out.basis.reserve(rank);
  for (int h = 1; h <= r; ++h) out.basis.push_back("D_Y^(" + std::to_string(h) + ")");
  out.basis.push_back("E_Delta");
  out.basis.push_back("E_S/iota");
  out.basis.push_back("E_CxC");
  for (int i = 1; i <= k; ++i) out.basis.push_back("E_CxR" + std::to_string(i));
  for (int i = 1; i <= k; ++i)
    out.basis.push_back("E_R" + std::to_string(i) + "xR" + std::to_string(i));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      out.basis.push_back("E_R" + std::to_string(i) + "xR" + std::to_string(j));

  const int delta = r, quotient = r + 1;
  out.b_iota.assign(rank, 0);
  out.b_sigma.assign(rank, 0);
  // Every exceptional class except E_Delta.
  for (int idx = quotient; idx < rank; ++idx) out.b_iota[idx] = 1;
  out.b_sigma[delta] = 1;
  out.b_sigma[quotient] = 1;

  out.b_sum.resize(rank);
  for (int idx = 0; idx < rank; ++idx) out.b_sum[idx] = out.b_iota[idx] + out.b_sigma[idx];
  return out;
}

}  // namespace hkq
