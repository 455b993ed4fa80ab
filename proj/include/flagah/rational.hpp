#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace flagah {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "p", "-p" or "p/q". Result is canonical (reduced, denominator > 0).
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& q);

// Deterministic PRNG for reproducible runs. mt19937 has a fully specified
// output sequence; the modulo mapping keeps draws platform-independent.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : engine_(static_cast<std::mt19937::result_type>(seed)) {}

  // uniform in [lo, hi]
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("DetRng::uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  // positive rational with numerator and denominator in [1, bound]
  Rational positive_rational(std::int64_t bound = 20) {
    return Rational(Integer(uniform(1, bound)), Integer(uniform(1, bound)));
  }

 private:
  std::mt19937 engine_;
};

}  // namespace flagah
