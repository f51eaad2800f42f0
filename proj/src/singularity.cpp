#include "hkquot/singularity.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace hkq {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LocalSpectrum::LocalSpectrum(int p, std::vector<int> exponents)
    : p_(p), exponents_(std::move(exponents)) {
  if (!is_prime(p_))
    throw DomainError("order " + std::to_string(p_) + " is not prime");
  if (exponents_.empty() || exponents_.size() % 2 != 0)
    throw DomainError("spectrum length must be even and positive, got " +
                      std::to_string(exponents_.size()));
  for (int a : exponents_)
    if (a < 0 || a >= p_)
      throw DomainError("exponent " + std::to_string(a) + " outside [0, " +
                        std::to_string(p_) + ")");
}

LocalSpectrum LocalSpectrum::power(int k) const {
  std::vector<int> out(exponents_.size());
  std::transform(exponents_.begin(), exponents_.end(), out.begin(),
                 [&](int a) { return static_cast<int>((static_cast<long long>(a) * k) % p_); });
  return {p_, std::move(out)};
}

std::string_view to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::CanonicalNotTerminal: return "CanonicalNotTerminal";
    case SingularityClass::Terminal: return "Terminal";
    case SingularityClass::NonCanonical: return "NonCanonical";
    case SingularityClass::SmoothPoint: return "SmoothPoint";
  }
  return "?";
}

Rational age(const LocalSpectrum& s) {
  const auto sum = std::accumulate(s.exponents().begin(), s.exponents().end(), std::int64_t{0});
  return {sum, s.p()};
}

namespace {

std::vector<int> histogram(const LocalSpectrum& s) {
  std::vector<int> count(s.p(), 0);
  for (int a : s.exponents()) ++count[a];
  return count;
}

// Symplectic: n pairs (a, p - a mod p). Every nonzero exponent must be
// matched by its negative; 0 pairs with itself and p = 2, a = 1 is
// self-paired, so those counts only need to be even.
std::optional<std::string> symplectic_violation(const LocalSpectrum& s) {
  const int p = s.p();
  const auto count = histogram(s);
  if (count[0] % 2 != 0) return "eigenvalue 1 must occur with even multiplicity";
  for (int a = 1; a < p; ++a) {
    const int b = p - a;
    if (a == b) {
      if (count[a] % 2 != 0)
        return "eigenvalue -1 must occur with even multiplicity";
    } else if (count[a] != count[b]) {
      return "exponents " + std::to_string(a) + " and " + std::to_string(b) +
             " must occur with equal multiplicity";
    }
  }
  return std::nullopt;
}

// Non-symplectic: s <= n pairs (0, 1) or (a, p + 1 - a) with a > 0, the
// remaining entries all equal to (p + 1)/2. For p = 2 only (0, 1) pairs
// exist, so exponent 0 has multiplicity exactly n.
std::optional<std::string> non_symplectic_violation(const LocalSpectrum& s, int n) {
  const int p = s.p();
  const auto count = histogram(s);
  if (p == 2) {
    if (count[0] != n)
      return "exponent 0 must have multiplicity exactly n = " + std::to_string(n);
    return std::nullopt;
  }
  if (count[0] != count[1])
    return "exponents 0 and 1 must occur with equal multiplicity";
  const int mid = (p + 1) / 2;
  for (int a = 2; a < p; ++a) {
    const int b = p + 1 - a;
    if (a == mid) continue;
    if (count[a] != count[b])
      return "exponents " + std::to_string(a) + " and " + std::to_string(b) +
             " must occur with equal multiplicity";
  }
  return std::nullopt;
}

}  // namespace

ValidationResult validate_spectrum(const LocalSpectrum& s, int n, bool symplectic) {
  if (n < 1 || s.dimension() != 2 * n)
    throw std::invalid_argument("spectrum length " + std::to_string(s.dimension()) +
                                " does not match 2n = " + std::to_string(2 * n));
  ValidationResult r;
  auto v = symplectic ? symplectic_violation(s) : non_symplectic_violation(s, n);
  if (v) r.violations.push_back(std::move(*v));
  return r;
}

SingularityClass classify(const LocalSpectrum& s) {
  const auto& ex = s.exponents();
  const auto sum = std::accumulate(ex.begin(), ex.end(), std::int64_t{0});
  if (sum % s.p() != 0)
    throw DomainError("not volume-preserving at this component (exponent sum " +
                      std::to_string(sum) + " is not divisible by " + std::to_string(s.p()) + ")");
  if (std::all_of(ex.begin(), ex.end(), [](int a) { return a == 0; }))
    return SingularityClass::SmoothPoint;

  Rational min_age = age(s);
  for (int k = 2; k < s.p(); ++k) min_age = std::min(min_age, age(s.power(k)));
  if (min_age == Rational(1)) return SingularityClass::CanonicalNotTerminal;
  if (min_age > Rational(1)) return SingularityClass::Terminal;
  return SingularityClass::NonCanonical;
}

bool volume_preserved(int p, int n, bool symplectic) {
  if (!is_prime(p)) throw DomainError("order " + std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("n must be positive");
  return symplectic || n % p == 0;
}

CrepantVerdict crepant_cy_criterion(int p, int n, std::span<const int> dims) {
  if (!is_prime(p)) throw DomainError("order " + std::to_string(p) + " is not prime");
  for (int d : dims)
    if (d < 0 || d > 2 * n)
      throw DomainError("fixed component dimension " + std::to_string(d) + " outside [0, 2n]");
  if (dims.empty()) return {true, true};
  const bool all_p = std::all_of(dims.begin(), dims.end(), [&](int d) { return d == p; });
  return {p == n && all_p, false};
}

LocalSpectrum lagrangian_spectrum(int p) {
  if (!is_prime(p)) throw DomainError("order " + std::to_string(p) + " is not prime");
  std::vector<int> ex(2 * static_cast<std::size_t>(p), 0);
  std::fill(ex.begin() + p, ex.end(), 1);
  return {p, std::move(ex)};
}

}  // namespace hkq
