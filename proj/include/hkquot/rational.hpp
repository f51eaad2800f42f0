#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace hkq {

// Compare against Rational(n), never a bare int: mixed-type comparisons in
// Boost 1.74 recurse without terminating.
using Rational = boost::rational<std::int64_t>;

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

// "p" when integral, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" (optional sign on p).
Rational parse_rational(const std::string& text);

// Base for every domain failure the library reports (bad invariants,
// inadmissible pairs, parity failures). Usage errors are not DomainErrors.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hkq
