#include "hkquot/riemann_roch.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkq {

GramLattice::GramLattice(std::vector<std::vector<std::int64_t>> gram, bool allow_odd)
    : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  for (const auto& row : gram_)
    if (row.size() != n) throw std::invalid_argument("Gram matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("Gram matrix is not symmetric");
    if (!allow_odd && gram_[i][i] % 2 != 0)
      throw DomainError("diagonal entry " + std::to_string(gram_[i][i]) +
                        " is odd; K3 lattices are even");
  }
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("class lengths differ");
  DivisorClass out = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += o.coeffs[i];
  return out;
}

DivisorClass DivisorClass::operator*(std::int64_t s) const {
  DivisorClass out = *this;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

std::int64_t pair(const GramLattice& L, const DivisorClass& v, const DivisorClass& w) {
  const auto n = static_cast<std::size_t>(L.rank());
  if (v.coeffs.size() != n || w.coeffs.size() != n)
    throw std::invalid_argument("class length does not match lattice rank " +
                                std::to_string(n));
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += v.coeffs[i] * L.at(i, j) * w.coeffs[j];
  return s;
}

Rational chi_c1_zero(std::int64_t D4, std::int64_t D2c2, std::int64_t chiO) {
  return Rational(D4, 24) + Rational(D2c2, 24) + chiO;
}

Rational chi_k3type(std::int64_t q) { return Rational((q + 4) * (q + 6), 8); }

std::int64_t chi_box(std::int64_t chi1, std::int64_t chi2) { return chi1 * chi2; }

std::int64_t chi_k3_surface(std::int64_t d2) {
  if (d2 % 2 != 0) throw DomainError("D^2 = " + std::to_string(d2) + " is odd on a K3 surface");
  return d2 / 2 + 2;
}

std::int64_t sq_restriction_product(std::int64_t d1, std::int64_t d2) { return 2 * d1 * d2; }

std::int64_t sq_restriction_diagonal(std::int64_t HH) { return 4 * HH; }

std::int64_t sq_restriction_diagonal_quotient(std::int64_t HH) { return 2 * HH; }

Rational chi_lift(const Rational& chiD, std::int64_t sigma_sq, std::int64_t chiOV,
                  std::int64_t chiOX) {
  return chiD / 2 + Rational(sigma_sq, 16) - Rational(chiOV, 2) + chiOX;
}

std::int64_t h0_hilb2(std::int64_t HH) {
  if (HH < 0 || HH % 2 != 0)
    throw DomainError("H.H = " + std::to_string(HH) + " must be even and nonnegative");
  const Rational v = chi_k3type(HH);
  if (!is_integral(v)) throw DomainError("h0 is not integral at H.H = " + std::to_string(HH));
  return v.numerator();
}

Rational h0_Z(std::int64_t h0H, std::int64_t hSigmaSxS) {
  return Rational(h0H * h0H, 2) + Rational(hSigmaSxS, 16);
}

Rational h0_Y(std::int64_t h0H, std::int64_t hSigmaSxS, std::int64_t hSigmaZ) {
  return Rational(h0H * h0H, 4) + Rational(hSigmaSxS, 32) + Rational(hSigmaZ, 16) + 1;
}

namespace {

DivisorClass sum_classes(const GramLattice& L, const std::vector<DivisorClass>& classes) {
  DivisorClass c{std::vector<std::int64_t>(static_cast<std::size_t>(L.rank()), 0)};
  for (const auto& f : classes) c = c + f;
  return c;
}

}  // namespace

std::int64_t chi_product_class(const GramLattice& L, const DivisorClass& x,
                               const DivisorClass& y) {
  return chi_box(chi_k3_surface(pair(L, x, x)), chi_k3_surface(pair(L, y, y)));
}

std::int64_t sigma_sq_product(const GramLattice& L, const DivisorClass& x, const DivisorClass& y,
                              const std::vector<DivisorClass>& fixed) {
  const auto c = sum_classes(L, fixed);
  return sq_restriction_product(pair(L, x, c), pair(L, y, c));
}

Rational chi_on_Z(const GramLattice& L, const DivisorClass& x, const DivisorClass& y,
                  const std::vector<DivisorClass>& fixed) {
  return chi_lift(chi_product_class(L, x, y), sigma_sq_product(L, x, y, fixed), 4, 2);
}

Rational chi_on_Y(const GramLattice& L, const DivisorClass& x,
                  const std::vector<DivisorClass>& fixed) {
  return chi_lift(chi_on_Z(L, x, x, fixed), sq_restriction_diagonal(pair(L, x, x)), 2, 2);
}

Rational chi_on_hilb2(const GramLattice& L, const DivisorClass& x) {
  return chi_k3type(pair(L, x, x));
}

const FixtureValue& FamilyFixture::value(const std::string& key) const {
  auto it = std::find_if(values.begin(), values.end(),
                         [&](const FixtureValue& v) { return v.key == key; });
  if (it == values.end()) throw std::out_of_range("no fixture value '" + key + "' in " + name);
  return *it;
}

namespace {

using Gram = std::vector<std::vector<std::int64_t>>;

FamilyFixture deg2_family() {
  GramLattice L(Gram{{2}});
  const DivisorClass H{{1}};
  const std::vector<DivisorClass> fixed{H * 3};
  const auto HH = pair(L, H, H);
  const auto zero = DivisorClass{{0}};
  const auto h_sigma = sigma_sq_product(L, H, H, fixed);
  const auto h_sigma_z = sq_restriction_diagonal(HH);

  std::vector<FixtureValue> v{
      {"h0_S", 3, chi_k3_surface(HH)},
      {"h0_S2", 6, chi_on_hilb2(L, H)},
      {"h0_Z", 9, chi_on_Z(L, H, H, fixed)},
      {"h0_Y", 6, chi_on_Y(L, H, fixed)},
      {"hSigma", 72, h_sigma},
      {"hSigma_Z", 8, h_sigma_z},
      {"chi(H_1Z)", 3, chi_on_Z(L, H, zero, fixed)},
  };
  return {"deg2", L, {"H"}, H, fixed, std::move(v)};
}

FamilyFixture u2_family() {
  GramLattice L(Gram{{0, 2}, {2, 0}});
  const DivisorClass l{{1, 0}}, m{{0, 1}}, zero{{0, 0}};
  const DivisorClass H = l + m;
  const std::vector<DivisorClass> fixed{l * 2 + m * 2};

  std::vector<FixtureValue> v{
      {"h0_S2", 10, chi_on_hilb2(L, H)},
      {"h0_Z", 16, chi_on_Z(L, H, H, fixed)},
      {"h0_Y", 10, chi_on_Y(L, H, fixed)},
      {"chi(l_S2)", 3, chi_on_hilb2(L, l)},
      {"chi(l_1Z)", 2, chi_on_Z(L, l, zero, fixed)},
      {"chi(H_1Z)", 4, chi_on_Z(L, H, zero, fixed)},
      {"chi(l_Z)", 2, chi_on_Z(L, l, l, fixed), false},
      {"chi(l_Z+m_1Z)", 8, chi_on_Z(L, l + m, l, fixed)},
      {"chi(l_Y)", 2, chi_on_Y(L, l, fixed), false},
  };
  return {"U2", L, {"l", "m"}, H, fixed, std::move(v)};
}

FamilyFixture u_family() {
  GramLattice L(Gram{{0, 1}, {1, -2}});
  const DivisorClass F{{1, 0}}, O{{0, 1}};
  const DivisorClass H = F * 4 + O * 2;
  const std::vector<DivisorClass> fixed{O, F * 6 + O * 3};

  std::vector<FixtureValue> v{
      {"h0_S2", 21, chi_on_hilb2(L, H)},
      {"chi(F_Z)", 4, chi_on_Z(L, F, F, fixed)},
      {"chi(F_Y)", 3, chi_on_Y(L, F, fixed)},
      {"chi(F_S2)", 3, chi_on_hilb2(L, F)},
  };
  return {"U", L, {"F", "O"}, H, fixed, std::move(v)};
}

}  // namespace

std::vector<FamilyFixture> family_fixtures() {
  return {deg2_family(), u2_family(), u_family()};
}

}  // namespace hkq
