#include "flagah/geometry.hpp"

namespace flagah {

ConnectionTable ConnectionTable::build(const AHStructure& s) {
  const RootSystem& rs = s.rs();
  const WeylBasis& wb = s.wb();
  const FlagManifold& f = s.flag();
  ConnectionTable t;
  t.stride_ = rs.num_roots();
  t.r_.assign(static_cast<std::size_t>(t.stride_) * t.stride_, Scalar());
  for (RootId a : f.r_complement()) {
    for (RootId b : f.r_complement()) {
      const RootId sum = rs.sum_root(a, b);
      if (sum == kNoRoot || f.in_r_theta(sum)) continue;
      const Rational factor =
          (s.lambda(sum) + s.lambda(a) - s.lambda(b)) / (Rational(2) * s.lambda(sum));
      t.r_[a * t.stride_ + b] = wb.n(b, a) * Scalar(factor);
    }
  }
  return t;
}

AlgebraVector Geometry::m_project(const AlgebraVector& v) const {
  const FlagManifold& f = s_->flag();
  AlgebraVector out;
  for (const auto& [id, c] : v.root_terms()) {
    if (f.in_m(id)) out.add_root(id, c);
  }
  return out;
}

AlgebraVector Geometry::u_map(RootId a, RootId b) const {
  const RootSystem& rs = s_->rs();
  const FlagManifold& f = s_->flag();
  if (f.in_r_theta(a) || f.in_r_theta(b)) {
    throw std::domain_error("u_map: roots must lie in R_Theta");
  }
  const RootId sum = rs.sum_root(a, b);
  if (sum == kNoRoot || f.in_r_theta(sum)) return {};
  const Rational factor = (s_->lambda(b) - s_->lambda(a)) / (Rational(2) * s_->lambda(sum));
  return AlgebraVector::x(sum, CScalar(s_->wb().n(a, b) * Scalar(factor)));
}

AlgebraVector Geometry::u_map_general(const AlgebraVector& v, const AlgebraVector& w) const {
  const RootSystem& rs = s_->rs();
  const WeylBasis& wb = s_->wb();
  // solve 2 g(U, X_{-gamma}) = g([X_{-gamma}, v]_m, w) + g(v, [X_{-gamma}, w]_m);
  // g is diagonal on the X-basis, so each coefficient comes out directly:
  // U = sum a_gamma X_gamma with a_gamma = -rhs / (2 lambda_gamma).
  AlgebraVector u;
  for (RootId gamma : s_->flag().r_complement()) {
    const AlgebraVector z = AlgebraVector::x(rs.negate(gamma));
    const CScalar rhs = s_->metric_eval(m_project(wb.bracket(z, v)), w) +
                        s_->metric_eval(v, m_project(wb.bracket(z, w)));
    if (rhs.is_zero()) continue;
    const CScalar denom(Scalar(Rational(-2) * s_->lambda(gamma)));
    u.add_root(gamma, rhs / denom);
  }
  return u;
}

AlgebraVector Geometry::u_vec(const AlgebraVector& v, const AlgebraVector& w) const {
  const RootSystem& rs = s_->rs();
  AlgebraVector out;
  for (const auto& [a, ca] : v.root_terms()) {
    for (const auto& [b, cb] : w.root_terms()) {
      const RootId sum = rs.sum_root(a, b);
      if (sum == kNoRoot || s_->flag().in_r_theta(sum)) continue;
      const Rational factor = (s_->lambda(b) - s_->lambda(a)) / (Rational(2) * s_->lambda(sum));
      if (factor == 0) continue;
      out.add_root(sum, ca * cb * CScalar(s_->wb().n(a, b) * Scalar(factor)));
    }
  }
  return out;
}

AlgebraVector Geometry::nabla(RootId a, RootId b) const {
  const RootId sum = s_->rs().sum_root(a, b);
  if (sum == kNoRoot || s_->flag().in_r_theta(sum)) return {};
  return AlgebraVector::x(sum, CScalar(table_.r(a, b)));
}

AlgebraVector Geometry::nabla_vec(const AlgebraVector& v, const AlgebraVector& w) const {
  const RootSystem& rs = s_->rs();
  AlgebraVector out;
  for (const auto& [a, ca] : v.root_terms()) {
    for (const auto& [b, cb] : w.root_terms()) {
      const RootId sum = rs.sum_root(a, b);
      if (sum == kNoRoot || s_->flag().in_r_theta(sum)) continue;
      out.add_root(sum, ca * cb * CScalar(table_.r(a, b)));
    }
  }
  return out;
}

AlgebraVector Geometry::nabla_real(RealKind xk, RootId beta, RealKind yk, RootId alpha) const {
  const RootSystem& rs = s_->rs();
  AlgebraVector x = AlgebraVector::x(beta);
  x.add_root(rs.negate(beta), CScalar(xk == RealKind::A ? -1 : 1));
  AlgebraVector y = AlgebraVector::x(alpha);
  y.add_root(rs.negate(alpha), CScalar(yk == RealKind::A ? -1 : 1));
  return nabla_vec(x, y);
}

AlgebraVector Geometry::nomizu(const AlgebraVector& v, const AlgebraVector& w) const {
  const RootSystem& rs = s_->rs();
  // L(X_a) X_b = (1/2 n_{a,b} + U-coefficient) X_{a+b} = r_{b,a} X_{a+b}
  AlgebraVector out;
  for (const auto& [a, ca] : v.root_terms()) {
    for (const auto& [b, cb] : w.root_terms()) {
      const RootId sum = rs.sum_root(a, b);
      if (sum == kNoRoot || s_->flag().in_r_theta(sum)) continue;
      out.add_root(sum, ca * cb * CScalar(table_.r(b, a)));
    }
  }
  return out;
}

AlgebraVector Geometry::nabla_j(const AlgebraVector& x, const AlgebraVector& z) const {
  return nomizu(x, s_->apply_j(z)) - s_->apply_j(nomizu(x, z));
}

CScalar Geometry::cov_deriv_omega(const AlgebraVector& x, const AlgebraVector& y,
                                  const AlgebraVector& z) const {
  s_->assert_in_m(x, "cov_deriv_omega");
  return s_->metric_eval(y, nabla_j(x, z));
}

CScalar Geometry::d_omega(const AlgebraVector& x, const AlgebraVector& y,
                          const AlgebraVector& z) const {
  CScalar s = cov_deriv_omega(x, y, z) + cov_deriv_omega(y, z, x) + cov_deriv_omega(z, x, y);
  return s * CScalar(Scalar(Rational(1, 3)));
}

CScalar Geometry::codifferential_term(int pair_index, bool jpart, const AlgebraVector& x) const {
  const auto& pair = s_->j_frame()[pair_index];
  const AlgebraVector& w = jpart ? pair.jv : pair.v;
  return cov_deriv_omega(w, w, x);
}

CScalar Geometry::codifferential(const AlgebraVector& x) const {
  CScalar s;
  for (int p = 0; p < static_cast<int>(s_->j_frame().size()); ++p) {
    s += codifferential_term(p, false, x);
    s += codifferential_term(p, true, x);
  }
  return s;
}

AlgebraVector Geometry::nijenhuis(const AlgebraVector& x, const AlgebraVector& y) const {
  const WeylBasis& wb = s_->wb();
  const AlgebraVector jx = s_->apply_j(x);
  const AlgebraVector jy = s_->apply_j(y);
  AlgebraVector n = m_project(wb.bracket(jx, jy));
  n.axpy(CScalar(-1), s_->apply_j(m_project(wb.bracket(jx, y))));
  n.axpy(CScalar(-1), s_->apply_j(m_project(wb.bracket(x, jy))));
  n.axpy(CScalar(-1), m_project(wb.bracket(x, y)));
  return CScalar(2) * n;
}

}  // namespace flagah
