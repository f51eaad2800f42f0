#include "hkquot/hodge.hpp"

#include <stdexcept>
#include <string>

#include "hkquot/rational.hpp"

namespace hkq {

HodgeDiamond4::HodgeDiamond4(int h00, int h10, int h20, int h11, int h30,
                             int h21, int h40, int h31, int h22)
    : h00_(h00), h10_(h10), h20_(h20), h11_(h11), h30_(h30), h21_(h21),
      h40_(h40), h31_(h31), h22_(h22) {
  for (int v : {h00, h10, h20, h11, h30, h21, h40, h31, h22})
    if (v < 0)
      throw DomainError("Hodge numbers must be nonnegative");
}

int HodgeDiamond4::at(int p, int q) const {
  if (p < 0 || p > 4 || q < 0 || q > 4)
    throw std::out_of_range("Hodge index out of range");
  if (p < q) std::swap(p, q);
  if (p + q > 4) {
    // Serre duality, then conjugation again to land in the stored half.
    const int sp = 4 - q, sq = 4 - p;
    p = sp;
    q = sq;
    if (p < q) std::swap(p, q);
  }
  switch (p * 10 + q) {
    case 0: return h00_;
    case 10: return h10_;
    case 20: return h20_;
    case 11: return h11_;
    case 30: return h30_;
    case 21: return h21_;
    case 40: return h40_;
    case 31: return h31_;
    case 22: return h22_;
  }
  throw std::logic_error("unreachable Hodge index");
}

FullHodgeTable HodgeDiamond4::expand() const {
  FullHodgeTable t{};
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) t[p][q] = at(p, q);
  return t;
}

HodgeDiamond4 HodgeDiamond4::compress(const FullHodgeTable& t) {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) {
      if (t[p][q] != t[q][p])
        throw std::invalid_argument("table violates h^{p,q} = h^{q,p}");
      if (t[p][q] != t[4 - p][4 - q])
        throw std::invalid_argument("table violates Serre duality");
    }
  return {t[0][0], t[1][0], t[2][0], t[1][1], t[3][0],
          t[2][1], t[4][0], t[3][1], t[2][2]};
}

int euler4(const HodgeDiamond4& d) {
  const auto t = d.expand();
  int e = 0;
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; q <= 4; ++q) e += ((p + q) % 2 == 0 ? 1 : -1) * t[p][q];
  return e;
}

ValidationResult validate_cy4(const HodgeDiamond4& d) {
  ValidationResult r;
  if (d.h00() != 1) r.violations.push_back("h00 must be 1");
  if (d.h40() != 1) r.violations.push_back("h40 must be 1");
  if (d.h10() != 0) r.violations.push_back("h10 must be 0");
  if (d.h20() != 0) r.violations.push_back("h20 must be 0");
  if (d.h30() != 0) r.violations.push_back("h30 must be 0");
  return r;
}

CalabiYau4Diamond::CalabiYau4Diamond(int h11, int h21, int h31, int h22)
    : diamond_(1, 0, 0, h11, 0, h21, 1, h31, h22) {}

CalabiYau4Diamond CalabiYau4Diamond::from_diamond(const HodgeDiamond4& d) {
  const auto v = validate_cy4(d);
  if (!v.ok()) {
    std::string msg = "not a Calabi-Yau diamond:";
    for (const auto& s : v.violations) msg += " " + s + ";";
    throw DomainError(msg);
  }
  return {d.h11(), d.h21(), d.h31(), d.h22()};
}

SurfaceHodge::SurfaceHodge(int h00_, int h10_, int h20_, int h11_)
    : h00(h00_), h10(h10_), h20(h20_), h11(h11_) {
  if (h00 != 1) throw DomainError("a connected surface has h00 = 1");
  if (h10 < 0 || h20 < 0 || h11 < 0)
    throw DomainError("surface Hodge numbers must be nonnegative");
}

FixedLocusHodge sum_surface_hodge(std::span<const SurfaceHodge> components) {
  FixedLocusHodge f;
  for (const auto& s : components) {
    f.b += 1;
    f.c += s.h10;
    f.d += s.h20;
    f.e += s.h11;
  }
  return f;
}

}  // namespace hkq
