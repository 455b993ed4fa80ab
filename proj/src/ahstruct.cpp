#include "flagah/ahstruct.hpp"

#include <stdexcept>

namespace flagah {

AHStructure AHStructure::build(FlagManifold flag, InvariantMetric g, IACS j) {
  AHStructure s;
  const int classes = flag.num_summands();
  if (static_cast<int>(g.lambda.size()) != classes) {
    throw std::invalid_argument("metric needs one lambda per summand class (" +
                                std::to_string(classes) + "), got " +
                                std::to_string(g.lambda.size()));
  }
  for (const auto& l : g.lambda) {
    if (l <= 0) throw std::invalid_argument("lambda values must be positive");
  }
  if (static_cast<int>(j.epsilon.size()) != classes) {
    throw std::invalid_argument("iacs needs one sign per summand class (" +
                                std::to_string(classes) + "), got " +
                                std::to_string(j.epsilon.size()));
  }
  for (int e : j.epsilon) {
    if (e != 1 && e != -1) throw std::invalid_argument("epsilon entries must be +1 or -1");
  }

  const RootSystem& rs = flag.rs();
  s.lambda_by_root_.assign(rs.num_roots(), Rational(0));
  s.eps_by_root_.assign(rs.num_roots(), 0);
  for (RootId id : flag.r_complement()) {
    const int c = flag.summand_of(id);
    s.lambda_by_root_[id] = g.lambda[c];
    s.eps_by_root_[id] = rs.is_positive(id) ? j.epsilon[c] : -j.epsilon[c];
  }

  for (RootId id : flag.m_positive()) {
    const Scalar inv_norm = Scalar::sqrt_rational(Rational(1) / (Rational(2) * g.lambda[flag.summand_of(id)]));
    AlgebraVector v = CScalar(inv_norm) * flag.a_vec(id);
    AlgebraVector jv = CScalar(Scalar(), inv_norm * Scalar(Rational(s.eps_by_root_[id]))) *
                       ([&] {
                         AlgebraVector sv = AlgebraVector::x(id);
                         sv.add_root(rs.negate(id), CScalar(1));
                         return sv;
                       }());
    s.frame_.push_back({std::move(v), std::move(jv)});
  }

  s.flag_ = std::move(flag);
  s.g_ = std::move(g);
  s.j_ = std::move(j);
  return s;
}

void AHStructure::check_in_m(const AlgebraVector& v, const char* who) const {
  if (v.has_cartan_part()) {
    throw std::domain_error(std::string(who) + ": vector has a Cartan component");
  }
  for (const auto& [id, c] : v.root_terms()) {
    if (flag_.in_r_theta(id)) {
      throw std::domain_error(std::string(who) + ": support outside R_Theta (root " +
                              rs().label(id) + ")");
    }
  }
}

CScalar AHStructure::metric_eval(const AlgebraVector& v, const AlgebraVector& w) const {
  check_in_m(v, "metric_eval");
  check_in_m(w, "metric_eval");
  CScalar s;
  for (const auto& [a, ca] : v.root_terms()) {
    const CScalar cb = w.root_coeff(rs().negate(a));
    if (cb.is_zero()) continue;
    // g(X_alpha, X_{-alpha}) = -lambda_alpha
    s -= ca * cb * CScalar(Scalar(lambda_by_root_[a]));
  }
  return s;
}

AlgebraVector AHStructure::apply_j(const AlgebraVector& v) const {
  check_in_m(v, "apply_j");
  AlgebraVector out;
  for (const auto& [id, c] : v.root_terms()) {
    out.add_root(id, CScalar(Scalar(), Scalar(Rational(eps_by_root_[id]))) * c);
  }
  return out;
}

CScalar AHStructure::omega(const AlgebraVector& v, const AlgebraVector& w) const {
  return metric_eval(v, apply_j(w));
}

std::string AHStructure::frame_label(int pair_index, bool jpart) const {
  const RootId id = flag_.m_positive()[pair_index];
  return (jpart ? "JV(" : "V(") + rs().label(id) + ")";
}

}  // namespace flagah
