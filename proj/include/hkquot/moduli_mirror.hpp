#pragma once

// Dimensions of deformation spaces attached to a K3 surface with a
// non-symplectic involution, and Hodge-level mirror checks for the
// resulting Calabi-Yau 4-folds.

#include <string>
#include <utility>
#include <vector>

#include "hkquot/hodge.hpp"

namespace hkq {

struct DimensionRow {
  std::string object;
  int value = 0;
};

/// Complex deformations: (S,i), (SxS,ixi), Z_S, (S^[2],i^[2]), (SxS,ixi,sigma), Y_S.
std::vector<DimensionRow> deform_dims(int N, int Nprime);

/// Kahler deformations: Z_S, (S^[2],i^[2]), Y_S.
std::vector<DimensionRow> kahler_dims(int N, int Nprime);

struct DeformRelation {
  std::string statement;
  bool relation_holds = false;      // the (in)equality itself
  bool equality = false;            // both sides equal
  bool expected_equality = false;   // the stated condition for equality
  bool consistent() const { return relation_holds && equality == expected_equality; }
};

std::vector<DeformRelation> deform_relations(int N, int Nprime);

enum class MirrorConvention {
  Strict,     // h11 <-> h31, equal h22 and equal h21
  HodgeOnly,  // drops the h21 condition
};

bool is_mirror(const CalabiYau4Diamond& a, const CalabiYau4Diamond& b,
               MirrorConvention conv = MirrorConvention::Strict);

using AdmissiblePair = std::pair<int, int>;

/// All unordered pairs of rows of the Y_S table that are mirror to each
/// other, normalized (first <= second) and sorted.
std::vector<std::pair<AdmissiblePair, AdmissiblePair>> mirror_scan_ys(
    MirrorConvention conv = MirrorConvention::Strict);

/// Admissible (N, N') with (N', N) admissible and N <= N', paired with
/// whether is_mirror(zs(N,N'), zs(N',N)) holds.
std::vector<std::pair<AdmissiblePair, bool>> zs_mirror_checks();

/// Quotient of the Ohashi-Wandel involution: h11 = t11 + b with t11 = 2 and
/// b = 2 fixed surfaces, compared against h31 of Y_S(10, 2).
struct OwReport {
  int ow_h11 = 0;
  int ys_h31 = 0;
  bool mirror_possible() const { return ow_h11 == ys_h31; }
};

OwReport ow_counterexample();

}  // namespace hkq
