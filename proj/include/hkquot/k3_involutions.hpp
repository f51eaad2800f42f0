#pragma once

// Non-symplectic involutions on K3 surfaces: invariants (r, a, N, N', g, k),
// the admissible family, and the Hodge data of the fixed loci induced on
// S^[2] and S x S.

#include <string_view>
#include <vector>

#include "hkquot/hodge.hpp"
#include "hkquot/rational.hpp"

namespace hkq {

enum class FixedLocusShape { Empty, TwoElliptic, General };

std::string_view to_string(FixedLocusShape s);

/// r: rank of the invariant lattice, a: 2-exponent of its discriminant group,
/// N: number of fixed curves, Nprime: their total genus, g: genus of the
/// highest-genus fixed curve, k: number of further (rational) fixed curves.
struct NikulinInvariants {
  int r = 0;
  int a = 0;
  int N = 0;
  int Nprime = 0;
  int g = 0;
  int k = 0;
  FixedLocusShape shape = FixedLocusShape::General;

  bool operator==(const NikulinInvariants&) const = default;
};

/// (N, N') is outside the admissible family although it passes the
/// elementary inequalities.
class InadmissiblePair : public DomainError {
 public:
  InadmissiblePair(int N, int Nprime);
  int N;
  int Nprime;
};

bool is_admissible(int N, int Nprime);

/// (2,2) yields the General shape; use two_elliptic() for the other one.
NikulinInvariants from_NN(int N, int Nprime);
NikulinInvariants two_elliptic();
NikulinInvariants from_ra(int r, int a, bool empty_fixed_locus);

/// The 65 admissible invariant sets: (0,0) first, then N ascending and N'
/// ascending within each N.
const std::vector<NikulinInvariants>& enumerate_admissible();

/// Genera of the fixed curves on S; length N, sum N'.
std::vector<int> fixed_curve_genera(const NikulinInvariants& inv);

std::vector<SurfaceHodge> fixed_surfaces_on_hilb2(const NikulinInvariants& inv);
std::vector<SurfaceHodge> fixed_surfaces_on_SxS(const NikulinInvariants& inv);

/// dim H^{1,1}(S^[2]) invariant under the natural involution: r + 1.
int t11_natural(const NikulinInvariants& inv);

/// One row of the reference table of Y_S Hodge numbers.
struct YsTableRow {
  int N;
  int Nprime;
  int h11;
  int h21;
  int h31;
  int h22;
  bool operator==(const YsTableRow&) const = default;
};

/// Reference Hodge numbers of Y_S as tabulated in the literature (65 rows, in
/// admissible order). This is the single embedded source of the admissible
/// (N, N') set.
const std::vector<YsTableRow>& reference_ys_table();

}  // namespace hkq
