#include "hkquot/k3_involutions.hpp"

#include <algorithm>
#include <string>

namespace hkq {

std::string_view to_string(FixedLocusShape s) {
  switch (s) {
    case FixedLocusShape::Empty: return "Empty";
    case FixedLocusShape::TwoElliptic: return "TwoElliptic";
    case FixedLocusShape::General: return "General";
  }
  return "?";
}

InadmissiblePair::InadmissiblePair(int n, int np)
    : DomainError("(N, N') = (" + std::to_string(n) + ", " + std::to_string(np) +
                  ") is not an admissible pair"),
      N(n), Nprime(np) {}

const std::vector<YsTableRow>& reference_ys_table() {
  static const std::vector<YsTableRow> table = {
      {0, 0, 12, 0, 10, 132},
      {1, 0, 14, 0, 9, 136},    {1, 1, 13, 1, 10, 134},   {1, 2, 12, 2, 12, 136},
      {1, 3, 11, 3, 15, 142},   {1, 4, 10, 4, 19, 152},   {1, 5, 9, 5, 24, 166},
      {1, 6, 8, 6, 30, 184},    {1, 7, 7, 7, 37, 206},    {1, 8, 6, 8, 45, 232},
      {1, 9, 5, 9, 54, 262},    {1, 10, 4, 10, 64, 296},
      {2, 0, 17, 0, 8, 144},    {2, 1, 16, 2, 9, 140},    {2, 2, 15, 4, 11, 140},
      {2, 3, 14, 6, 14, 144},   {2, 4, 13, 8, 18, 152},   {2, 5, 12, 10, 23, 164},
      {2, 6, 11, 12, 29, 180},  {2, 7, 10, 14, 36, 200},  {2, 8, 9, 16, 44, 224},
      {2, 9, 8, 18, 53, 252},   {2, 10, 7, 20, 63, 284},
      {3, 0, 21, 0, 7, 156},    {3, 1, 20, 3, 8, 150},    {3, 2, 19, 6, 10, 148},
      {3, 3, 18, 9, 13, 150},   {3, 4, 17, 12, 17, 156},  {3, 5, 16, 15, 22, 166},
      {3, 6, 15, 18, 28, 180},  {3, 7, 14, 21, 35, 198},
      {4, 0, 26, 0, 6, 172},    {4, 1, 25, 4, 7, 164},    {4, 2, 24, 8, 9, 160},
      {4, 3, 23, 12, 12, 160},  {4, 4, 22, 16, 16, 164},  {4, 5, 21, 20, 21, 172},
      {4, 6, 20, 24, 27, 184},
      {5, 0, 32, 0, 5, 192},    {5, 1, 31, 5, 6, 182},    {5, 2, 30, 10, 8, 176},
      {5, 3, 29, 15, 11, 174},  {5, 4, 28, 20, 15, 176},  {5, 5, 27, 25, 20, 182},
      {5, 6, 26, 30, 26, 192},
      {6, 0, 39, 0, 4, 216},    {6, 1, 38, 6, 5, 204},    {6, 2, 37, 12, 7, 196},
      {6, 3, 36, 18, 10, 192},  {6, 4, 35, 24, 14, 192},  {6, 5, 34, 30, 19, 196},
      {6, 6, 33, 36, 25, 204},
      {7, 0, 47, 0, 3, 244},    {7, 1, 46, 7, 4, 230},    {7, 2, 45, 14, 6, 220},
      {7, 3, 44, 21, 9, 214},
      {8, 0, 56, 0, 2, 276},    {8, 1, 55, 8, 3, 260},    {8, 2, 54, 16, 5, 248},
      {9, 0, 66, 0, 1, 312},    {9, 1, 65, 9, 2, 294},    {9, 2, 64, 18, 4, 280},
      {10, 0, 77, 0, 0, 352},   {10, 1, 76, 10, 1, 332},  {10, 2, 75, 20, 3, 316},
  };
  return table;
}

bool is_admissible(int N, int Nprime) {
  const auto& t = reference_ys_table();
  return std::any_of(t.begin(), t.end(),
                     [&](const YsTableRow& r) { return r.N == N && r.Nprime == Nprime; });
}

namespace {

NikulinInvariants empty_invariants() {
  return {10, 10, 0, 0, 0, 0, FixedLocusShape::Empty};
}

NikulinInvariants general_from_NN(int N, int Nprime) {
  return {10 + N - Nprime, 12 - N - Nprime, N, Nprime, Nprime, N - 1,
          FixedLocusShape::General};
}

}  // namespace

NikulinInvariants from_NN(int N, int Nprime) {
  if (N == 0 && Nprime == 0) return empty_invariants();
  if (N < 1 || Nprime < 0)
    throw DomainError("(N, N') = (" + std::to_string(N) + ", " + std::to_string(Nprime) +
                      ") violates N >= 1, N' >= 0");
  const auto inv = general_from_NN(N, Nprime);
  if (inv.r < 1 || inv.r > 20 || inv.a < 0)
    throw DomainError("(N, N') = (" + std::to_string(N) + ", " + std::to_string(Nprime) +
                      ") gives r = " + std::to_string(inv.r) + ", a = " +
                      std::to_string(inv.a) + " outside 1 <= r <= 20, a >= 0");
  if (!is_admissible(N, Nprime)) throw InadmissiblePair(N, Nprime);
  return inv;
}

NikulinInvariants two_elliptic() {
  return {10, 8, 2, 2, 1, 0, FixedLocusShape::TwoElliptic};
}

NikulinInvariants from_ra(int r, int a, bool empty_fixed_locus) {
  if ((r - a) % 2 != 0)
    throw DomainError("r - a = " + std::to_string(r - a) + " must be even");
  if (r == 10 && a == 10 && empty_fixed_locus) return empty_invariants();
  if (empty_fixed_locus)
    throw DomainError("an empty fixed locus requires (r, a) = (10, 10)");
  if (r < 1 || r > 20 || a < 0)
    throw DomainError("(r, a) = (" + std::to_string(r) + ", " + std::to_string(a) +
                      ") outside 1 <= r <= 20, a >= 0");
  const int N = (2 + r - a) / 2;
  const int Nprime = (22 - r - a) / 2;
  if (N < 1 || Nprime < 0) throw InadmissiblePair(N, Nprime);
  return from_NN(N, Nprime);
}

const std::vector<NikulinInvariants>& enumerate_admissible() {
  static const std::vector<NikulinInvariants> all = [] {
    std::vector<NikulinInvariants> out;
    for (const auto& row : reference_ys_table()) out.push_back(from_NN(row.N, row.Nprime));
    return out;
  }();
  return all;
}

std::vector<int> fixed_curve_genera(const NikulinInvariants& inv) {
  switch (inv.shape) {
    case FixedLocusShape::Empty: return {};
    case FixedLocusShape::TwoElliptic: return {1, 1};
    case FixedLocusShape::General: break;
  }
  std::vector<int> genera(static_cast<std::size_t>(inv.k) + 1, 0);
  genera.front() = inv.g;
  return genera;
}

std::vector<SurfaceHodge> fixed_surfaces_on_hilb2(const NikulinInvariants& inv) {
  const SurfaceHodge quotient_surface{1, 0, 0, inv.r};
  switch (inv.shape) {
    case FixedLocusShape::Empty:
      return {quotient_surface};
    case FixedLocusShape::TwoElliptic:
      return {surfaces::elliptic_sym2(), surfaces::elliptic_sym2(),
              surfaces::elliptic_product(), quotient_surface};
    case FixedLocusShape::General:
      break;
  }
  const int g = inv.g, k = inv.k;
  std::vector<SurfaceHodge> out;
  out.emplace_back(1, g, g * (g - 1) / 2, 1 + g * g);   // C^[2]
  for (int i = 0; i < k; ++i) out.emplace_back(1, g, 0, 2);  // C x R_i
  for (int i = 0; i < k; ++i) out.emplace_back(1, 0, 0, 1);  // R_i^[2]
  for (int i = 0; i < k * (k - 1) / 2; ++i) out.push_back(surfaces::p1_times_p1());
  out.push_back(quotient_surface);
  return out;
}

std::vector<SurfaceHodge> fixed_surfaces_on_SxS(const NikulinInvariants& inv) {
  switch (inv.shape) {
    case FixedLocusShape::Empty:
      return {};
    case FixedLocusShape::TwoElliptic:
      return std::vector<SurfaceHodge>(4, surfaces::elliptic_product());
    case FixedLocusShape::General:
      break;
  }
  const int g = inv.g, k = inv.k;
  std::vector<SurfaceHodge> out;
  out.emplace_back(1, 2 * g, g * g, 2 + 2 * g * g);  // C x C
  for (int i = 0; i < 2 * k; ++i) out.emplace_back(1, g, 0, 2);
  for (int i = 0; i < k * k; ++i) out.push_back(surfaces::p1_times_p1());
  return out;
}

int t11_natural(const NikulinInvariants& inv) { return inv.r + 1; }

}  // namespace hkq
