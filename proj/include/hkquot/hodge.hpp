#pragma once

// Hodge diamonds of compact 4-folds and Hodge data of fixed surfaces.

#include <array>
#include <span>
#include <string>
#include <vector>

namespace hkq {

using FullHodgeTable = std::array<std::array<int, 5>, 5>;

/// Hodge diamond of a compact Kähler 4-fold. Only the entries h^{p,q} with
/// p >= q and p + q <= 4 are stored; conjugation and Serre duality give
/// the rest, so an asymmetric diamond cannot be represented.
class HodgeDiamond4 {
 public:
  HodgeDiamond4(int h00, int h10, int h20, int h11, int h30, int h21, int h40,
                int h31, int h22);

  int h00() const { return h00_; }
  int h10() const { return h10_; }
  int h20() const { return h20_; }
  int h11() const { return h11_; }
  int h30() const { return h30_; }
  int h21() const { return h21_; }
  int h40() const { return h40_; }
  int h31() const { return h31_; }
  int h22() const { return h22_; }

  /// h^{p,q} for 0 <= p,q <= 4.
  int at(int p, int q) const;
  FullHodgeTable expand() const;

  /// Inverse of expand(); throws std::invalid_argument if the table breaks
  /// either symmetry.
  static HodgeDiamond4 compress(const FullHodgeTable& table);

  bool operator==(const HodgeDiamond4&) const = default;

 private:
  int h00_, h10_, h20_, h11_, h30_, h21_, h40_, h31_, h22_;
};

/// Alternating sum of the fully expanded table.
int euler4(const HodgeDiamond4& d);

struct ValidationResult {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationResult validate_cy4(const HodgeDiamond4& d);

/// A diamond with h00 = h40 = 1 and h10 = h20 = h30 = 0.
class CalabiYau4Diamond {
 public:
  CalabiYau4Diamond(int h11, int h21, int h31, int h22);
  /// Throws DomainError listing the violations if `d` is not CY-shaped.
  static CalabiYau4Diamond from_diamond(const HodgeDiamond4& d);

  int h11() const { return diamond_.h11(); }
  int h21() const { return diamond_.h21(); }
  int h31() const { return diamond_.h31(); }
  int h22() const { return diamond_.h22(); }
  const HodgeDiamond4& diamond() const { return diamond_; }
  int euler() const { return euler4(diamond_); }

  std::array<int, 4> compact() const { return {h11(), h21(), h31(), h22()}; }

  bool operator==(const CalabiYau4Diamond&) const = default;

 private:
  HodgeDiamond4 diamond_;
};

/// One connected smooth surface.
struct SurfaceHodge {
  int h00 = 1;
  int h10 = 0;
  int h20 = 0;
  int h11 = 0;

  SurfaceHodge(int h00, int h10, int h20, int h11);

  int euler() const { return 2 * h00 - 4 * h10 + 2 * h20 + h11; }
  bool operator==(const SurfaceHodge&) const = default;
};

/// Component count and summed h^{1,0}, h^{2,0}, h^{1,1} of a fixed locus.
struct FixedLocusHodge {
  int b = 0;
  int c = 0;
  int d = 0;
  int e = 0;
  bool operator==(const FixedLocusHodge&) const = default;
};

/// Dimensions of the invariant parts of H^{1,1}, H^{2,1}, H^{3,1}, H^{2,2}.
struct InvariantCohomology {
  int t11 = 0;
  int t21 = 0;
  int t31 = 0;
  int t22 = 0;

  int h4_invariant_dim() const { return 2 + 2 * t31 + t22; }
  bool operator==(const InvariantCohomology&) const = default;
};

FixedLocusHodge sum_surface_hodge(std::span<const SurfaceHodge> components);

// Frequently used surfaces.
namespace surfaces {
inline SurfaceHodge projective_plane() { return {1, 0, 0, 1}; }
inline SurfaceHodge p1_times_p1() { return {1, 0, 0, 2}; }
inline SurfaceHodge elliptic_sym2() { return {1, 1, 0, 2}; }
inline SurfaceHodge elliptic_product() { return {1, 2, 1, 4}; }
}  // namespace surfaces

}  // namespace hkq
