#include "doctest.h"

#include <numeric>
#include <random>
#include <vector>

#include "hkquot/singularity.hpp"
#include "oracles.hpp"

using namespace hkq;

TEST_CASE("spectrum construction") {
  CHECK_THROWS_AS(LocalSpectrum(4, {0, 1}), DomainError);
  CHECK_THROWS_AS(LocalSpectrum(3, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(LocalSpectrum(3, {}), DomainError);
  CHECK_THROWS_AS(LocalSpectrum(3, {0, 3}), DomainError);
  CHECK(LocalSpectrum(3, {1, 2}).power(2).exponents() == std::vector<int>{2, 1});
}

TEST_CASE("age") {
  CHECK(age(LocalSpectrum(2, {0, 0, 1, 1})) == Rational(1));
  CHECK(age(LocalSpectrum(3, {0, 1, 0, 1, 0, 1})) == Rational(1));
  CHECK(age(LocalSpectrum(2, {1, 1, 1, 1})) == Rational(2));
  CHECK(age(LocalSpectrum(5, {1, 1})) == Rational(2, 5));
}

TEST_CASE("validate_spectrum examples") {
  CHECK(validate_spectrum(LocalSpectrum(2, {0, 0, 1, 1}), 2, false).ok());
  CHECK_FALSE(validate_spectrum(LocalSpectrum(2, {0, 1, 1, 1}), 2, false).ok());
  CHECK(validate_spectrum(LocalSpectrum(3, {0, 1, 0, 1, 0, 1}), 3, false).ok());
  CHECK(validate_spectrum(LocalSpectrum(2, {1, 1, 0, 0}), 2, true).ok());
  CHECK_FALSE(validate_spectrum(LocalSpectrum(2, {1, 0, 0, 0}), 2, true).ok());
  CHECK_THROWS_AS(validate_spectrum(LocalSpectrum(2, {0, 1}), 2, false), std::invalid_argument);
}

TEST_CASE("validate_spectrum matches the brute-force local-form oracle") {
  for (int p : {2, 3, 5}) {
    const int max_n = p == 5 ? 2 : 4;
    for (int n = 1; n <= max_n; ++n)
      for (const auto& ex : oracle::all_spectra(p, n))
        for (bool symp : {true, false}) {
          const bool expected = oracle::is_local_form(p, ex, symp);
          const bool got = validate_spectrum(LocalSpectrum(p, ex), n, symp).ok();
          if (got != expected) {
            INFO("p=", p, " n=", n, " symplectic=", symp);
            CHECK(got == expected);
          }
        }
  }
}

TEST_CASE("classify") {
  CHECK(classify(LocalSpectrum(2, {0, 0, 1, 1})) == SingularityClass::CanonicalNotTerminal);
  CHECK(classify(LocalSpectrum(2, {1, 1, 1, 1})) == SingularityClass::Terminal);
  CHECK(classify(LocalSpectrum(5, {0, 0, 0, 0})) == SingularityClass::SmoothPoint);
  CHECK_THROWS_AS(classify(LocalSpectrum(3, {0, 1})), DomainError);
  // The generator has age 2; its cube has age 1.
  CHECK(classify(LocalSpectrum(5, {2, 2, 2, 4})) == SingularityClass::CanonicalNotTerminal);
  CHECK(classify(LocalSpectrum(5, {1, 4, 2, 3})) == SingularityClass::Terminal);
}

TEST_CASE("Lagrangian spectra are canonical and not terminal") {
  CHECK(lagrangian_spectrum(2).exponents() == std::vector<int>{0, 0, 1, 1});
  CHECK(lagrangian_spectrum(3).exponents() == std::vector<int>{0, 0, 0, 1, 1, 1});
  for (int p = 2; p <= 23; ++p) {
    if (!is_prime(p)) continue;
    const auto s = lagrangian_spectrum(p);
    CHECK(s.dimension() == 2 * p);
    CHECK(age(s) == Rational(1));
    CHECK(classify(s) == SingularityClass::CanonicalNotTerminal);
  }
  CHECK_THROWS_AS(lagrangian_spectrum(9), DomainError);
}

TEST_CASE("p = 2 symplectic: canonical not terminal iff exactly two exponents are 1") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& ex : oracle::all_spectra(2, n)) {
      const LocalSpectrum s(2, ex);
      if (!validate_spectrum(s, n, true).ok()) continue;
      const int ones = std::accumulate(ex.begin(), ex.end(), 0);
      if (ones == 0) continue;
      CHECK((classify(s) == SingularityClass::CanonicalNotTerminal) == (ones == 2));
    }
}

TEST_CASE("volume_preserved") {
  CHECK(volume_preserved(2, 2, false));
  CHECK_FALSE(volume_preserved(5, 2, false));
  CHECK(volume_preserved(3, 3, false));
  for (int p = 2; p <= 13; ++p) {
    if (!is_prime(p)) continue;
    for (int n = 1; n <= 26; ++n) {
      CHECK(volume_preserved(p, n, false) == (n % p == 0));
      CHECK(volume_preserved(p, n, true));
    }
  }
}

TEST_CASE("crepant_cy_criterion") {
  const std::vector<int> lag{2, 2, 2}, mixed{3, 2}, one{2};
  CHECK(crepant_cy_criterion(2, 2, lag).holds);
  CHECK_FALSE(crepant_cy_criterion(3, 3, mixed).holds);
  CHECK_FALSE(crepant_cy_criterion(2, 3, one).holds);
  const auto free = crepant_cy_criterion(2, 2, {});
  CHECK(free.holds);
  CHECK(free.free_action);
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 10; ++n) {
      const std::vector<int> dims{p};
      if (volume_preserved(p, n, false) && crepant_cy_criterion(p, n, dims).holds)
        CHECK(n % p == 0);
    }
}

TEST_CASE("ages of random det-1 spectra are positive integers") {
  std::mt19937 rng(20261016);
  const std::vector<int> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};
  int tested = 0;
  while (tested < 10000) {
    const int p = primes[rng() % primes.size()];
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<int> ex(2 * n);
    for (auto& a : ex) a = static_cast<int>(rng() % p);
    // Fix the last exponent so the determinant is 1.
    const int partial = std::accumulate(ex.begin(), ex.end() - 1, 0);
    ex.back() = (p - partial % p) % p;
    if (std::all_of(ex.begin(), ex.end(), [](int a) { return a == 0; })) continue;
    const auto a = age(LocalSpectrum(p, ex));
    CHECK(is_integral(a));
    CHECK(a > Rational(0));
    ++tested;
  }
}
