#pragma once

// Exact Euler characteristics of line bundles on c1 = 0 fourfolds, on
// K3^[2]-type fourfolds, and on double-cover quotients, plus the lattice
// data of three worked families of K3 surfaces with an involution.

#include <cstdint>
#include <string>
#include <vector>

#include "hkquot/rational.hpp"

namespace hkq {

class GramLattice {
 public:
  /// Throws std::invalid_argument unless the matrix is square and symmetric.
  /// Throws DomainError on an odd diagonal entry unless allow_odd is set.
  explicit GramLattice(std::vector<std::vector<std::int64_t>> gram, bool allow_odd = false);

  int rank() const { return static_cast<int>(gram_.size()); }
  std::int64_t at(int i, int j) const { return gram_[i][j]; }
  const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }

 private:
  std::vector<std::vector<std::int64_t>> gram_;
};

struct DivisorClass {
  std::vector<std::int64_t> coeffs;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator*(std::int64_t s) const;
};

/// v^T G w. Throws std::invalid_argument on a rank mismatch.
std::int64_t pair(const GramLattice& L, const DivisorClass& v, const DivisorClass& w);

/// Riemann-Roch on a fourfold with c1 = 0: D^4/24 + D^2.c2/24 + chi(O).
Rational chi_c1_zero(std::int64_t D4, std::int64_t D2c2, std::int64_t chiO);

/// Riemann-Roch on a K3^[2]-type fourfold in terms of the BBF square q.
Rational chi_k3type(std::int64_t q);

/// Kunneth: chi of an exterior product on a product variety.
std::int64_t chi_box(std::int64_t chi1, std::int64_t chi2);

/// Riemann-Roch on a K3 surface: d2/2 + 2. Throws DomainError on odd d2.
std::int64_t chi_k3_surface(std::int64_t d2);

/// Self-intersection of a divisor of bidegree (d1, d2) on a product of curves.
std::int64_t sq_restriction_product(std::int64_t d1, std::int64_t d2);

/// (H_1 + H_2)^2 restricted to the diagonal of S x S: 4 HH.
std::int64_t sq_restriction_diagonal(std::int64_t HH);
/// Contribution of one fixed surface on the quotient level: 2 HH.
std::int64_t sq_restriction_diagonal_quotient(std::int64_t HH);

/// chi of the descended divisor on the crepant resolution of a double cover
/// V -> V/alpha, from chi(D) on V and the square of D on the fixed locus.
Rational chi_lift(const Rational& chiD, std::int64_t sigma_sq, std::int64_t chiOV,
                  std::int64_t chiOX);

/// (HH+4)(HH+6)/8. Throws DomainError unless HH >= 0 and even.
std::int64_t h0_hilb2(std::int64_t HH);

/// h0(H)^2/2 + h_Sigma/16.
Rational h0_Z(std::int64_t h0H, std::int64_t hSigmaSxS);

/// h0(H)^2/4 + h_Sigma/32 + h_SigmaZ/16 + 1.
Rational h0_Y(std::int64_t h0H, std::int64_t hSigmaSxS, std::int64_t hSigmaZ);

// Helpers computing the inputs above from lattice data. `fixed` lists the
// classes of the fixed curves of the involution on S.

/// chi(x [x] y) on S x S.
std::int64_t chi_product_class(const GramLattice& L, const DivisorClass& x,
                               const DivisorClass& y);
/// Square of x [x] y restricted to the fixed surfaces C_i x C_j of S x S.
std::int64_t sigma_sq_product(const GramLattice& L, const DivisorClass& x, const DivisorClass& y,
                              const std::vector<DivisorClass>& fixed);
/// chi on Z of the class induced by x [x] y.
Rational chi_on_Z(const GramLattice& L, const DivisorClass& x, const DivisorClass& y,
                  const std::vector<DivisorClass>& fixed);
/// chi on Y of the class induced by x on S, through Z and the diagonal.
Rational chi_on_Y(const GramLattice& L, const DivisorClass& x,
                  const std::vector<DivisorClass>& fixed);
/// chi on S^[2] of the class induced by x.
Rational chi_on_hilb2(const GramLattice& L, const DivisorClass& x);

struct FixtureValue {
  std::string key;
  Rational expected;    // transcribed value
  Rational recomputed;  // from the lattice data
  bool hard = true;     // false for known tensions
  bool match() const { return expected == recomputed; }
};

struct FamilyFixture {
  std::string name;
  GramLattice lattice;
  std::vector<std::string> basis;
  DivisorClass H;
  std::vector<DivisorClass> fixed;
  std::vector<FixtureValue> values;

  const FixtureValue& value(const std::string& key) const;
};

/// deg2, U2, U in that order.
std::vector<FamilyFixture> family_fixtures();

}  // namespace hkq
