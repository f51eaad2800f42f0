#pragma once

// Local analysis of a prime-order automorphism of a hyperkähler manifold at
// one component of its fixed locus: eigenvalue exponents, age, and the
// resulting type of quotient singularity.

#include <span>
#include <string_view>
#include <vector>

#include "hkquot/hodge.hpp"
#include "hkquot/rational.hpp"

namespace hkq {

bool is_prime(int n);

/// Eigenvalues zeta_p^{a_i} of the linearisation at a fixed component,
/// stored as the exponents a_i in [0, p). The ambient dimension is
/// exponents().size(), always even.
class LocalSpectrum {
 public:
  LocalSpectrum(int p, std::vector<int> exponents);

  int p() const { return p_; }
  const std::vector<int>& exponents() const { return exponents_; }
  int dimension() const { return static_cast<int>(exponents_.size()); }

  /// Spectrum of the k-th power of the automorphism.
  LocalSpectrum power(int k) const;

 private:
  int p_;
  std::vector<int> exponents_;
};

enum class SingularityClass { CanonicalNotTerminal, Terminal, NonCanonical, SmoothPoint };

std::string_view to_string(SingularityClass c);

Rational age(const LocalSpectrum& s);

/// Checks the spectrum against the shapes a symplectic (resp. non-symplectic)
/// automorphism of a 2n-dimensional hyperkähler manifold can have. Throws
/// std::invalid_argument when the spectrum length is not 2n.
ValidationResult validate_spectrum(const LocalSpectrum& s, int n, bool symplectic);

/// Reid–Tai classification over every nontrivial power of the generator.
/// Throws DomainError unless the exponents sum to 0 mod p.
SingularityClass classify(const LocalSpectrum& s);

bool volume_preserved(int p, int n, bool symplectic);

struct CrepantVerdict {
  bool holds = false;
  // Empty fixed locus: the quotient is smooth and the answer is vacuous.
  bool free_action = false;
};

CrepantVerdict crepant_cy_criterion(int p, int n, std::span<const int> fixed_component_dims);

/// Exponent 0 and exponent 1 each with multiplicity p (ambient dimension 2p).
LocalSpectrum lagrangian_spectrum(int p);

}  // namespace hkq
