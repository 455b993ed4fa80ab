#include "flagah/scalar.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <cmath>

namespace flagah {

SqfreeSplit squarefree_split(std::int64_t n) {
  if (n <= 0) throw std::domain_error("squarefree_split: argument must be positive");
  std::int64_t square_root = 1;
  std::int64_t sqfree = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int k = 0; k < e / 2; ++k) square_root *= p;
    if (e % 2) sqfree *= p;
  }
  sqfree *= n;  // remaining prime factor, if any
  return {square_root, sqfree};
}

Scalar::Scalar(const Rational& q) {
  if (q != 0) terms_.emplace_back(1, q);
}

void Scalar::add_term(std::int64_t radicand, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), radicand,
                             [](const Term& t, std::int64_t m) { return t.first < m; });
  if (it != terms_.end() && it->first == radicand) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {radicand, coeff});
  }
}

Scalar Scalar::radical(const Rational& q, std::int64_t m) {
  const auto split = squarefree_split(m);
  Scalar s;
  s.add_term(split.sqfree, q * Rational(split.square_root));
  return s;
}

Scalar Scalar::sqrt_rational(const Rational& q) {
  if (q <= 0) throw std::domain_error("sqrt_rational: argument must be positive");
  const Integer num = numerator(q);
  const Integer den = denominator(q);
  const Integer prod = num * den;
  if (prod > Integer(std::int64_t{1} << 62)) {
    throw std::domain_error("sqrt_rational: radicand too large");
  }
  // sqrt(num/den) = sqrt(num*den)/den
  const auto split = squarefree_split(static_cast<std::int64_t>(prod));
  Scalar s;
  s.add_term(split.sqfree, Rational(Integer(split.square_root), den));
  return s;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
}

Rational Scalar::rational_part() const {
  if (!terms_.empty() && terms_[0].first == 1) return terms_[0].second;
  return Rational(0);
}

Rational Scalar::as_rational() const {
  if (!is_rational()) throw std::domain_error("Scalar::as_rational: value is irrational: " + str());
  return rational_part();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& t : o.terms_) add_term(t.first, t.second);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& t : o.terms_) add_term(t.first, -t.second);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [ma, qa] : a.terms_) {
    for (const auto& [mb, qb] : b.terms_) {
      // sqrt(ma)*sqrt(mb) = g*sqrt((ma/g)*(mb/g)) with g = gcd; the two
      // cofactors are coprime and square-free, so no refactoring is needed.
      const std::int64_t g = std::gcd(ma, mb);
      r.add_term((ma / g) * (mb / g), qa * qb * Rational(g));
    }
  }
  return r;
}

Scalar Scalar::reciprocal() const {
  if (terms_.size() != 1) {
    throw std::domain_error("Scalar::reciprocal: only single-term scalars are invertible here, got " +
                            str());
  }
  const auto& [m, q] = terms_[0];
  // 1/(q*sqrt(m)) = sqrt(m)/(q*m)
  Scalar r;
  r.add_term(m, Rational(1) / (q * Rational(m)));
  return r;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    Rational coeff = q;
    if (!first) {
      out += (coeff < 0) ? "-" : "+";
      if (coeff < 0) coeff = -coeff;
    }
    if (m == 1) {
      out += rational_str(coeff);
    } else if (coeff == 1) {
      out += "sqrt(" + std::to_string(m) + ")";
    } else if (coeff == -1) {
      out += "-sqrt(" + std::to_string(m) + ")";
    } else {
      out += rational_str(coeff) + "*sqrt(" + std::to_string(m) + ")";
    }
    first = false;
  }
  return out;
}

double Scalar::approx() const {
  double v = 0;
  for (const auto& [m, q] : terms_) {
    v += numerator(q).convert_to<double>() / denominator(q).convert_to<double>() *
         std::sqrt(static_cast<double>(m));
  }
  return v;
}

CScalar CScalar::reciprocal() const {
  if (is_zero()) throw std::domain_error("CScalar::reciprocal: division by zero");
  const Scalar norm = re_ * re_ + im_ * im_;
  const Scalar inv = norm.reciprocal();
  return CScalar(re_ * inv, -(im_ * inv));
}

std::string CScalar::str() const {
  if (im_.is_zero()) return re_.str();
  const std::string impart = "i*(" + im_.str() + ")";
  if (re_.is_zero()) return impart;
  return re_.str() + "+" + impart;
}

}  // namespace flagah
