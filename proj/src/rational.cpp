#include "flagah/rational.hpp"

namespace flagah {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    // integer division through Rational canonicalizes sign and gcd
    return Rational(num) / Rational(den);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid rational literal: '" + text + "'");
  }
}

std::string rational_str(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace flagah
