#pragma once

#include "flagah/ahstruct.hpp"

namespace flagah {

// r_{alpha,beta} = n_{beta,alpha} (lambda_{alpha+beta} + lambda_alpha - lambda_beta)
//                  / (2 lambda_{alpha+beta}),  for alpha+beta in R_Theta.
// Built once per structure, then read-only.
class ConnectionTable {
 public:
  static ConnectionTable build(const AHStructure& s);

  // zero scalar when alpha+beta is outside R_Theta
  const Scalar& r(RootId a, RootId b) const { return r_[a * stride_ + b]; }

 private:
  int stride_ = 0;
  std::vector<Scalar> r_;
};

enum class RealKind { A, S };  // A_alpha = X_alpha - X_{-alpha}, S_alpha = X_alpha + X_{-alpha}

// Tensor engine for one almost Hermitian structure. Holds the r-table; all
// evaluations are pure and at the origin. The caller keeps the structure
// alive for the lifetime of this object.
class Geometry {
 public:
  explicit Geometry(const AHStructure& s) : s_(&s), table_(ConnectionTable::build(s)) {}

  const AHStructure& structure() const { return *s_; }
  const ConnectionTable& table() const { return table_; }

  // m-component: drops the Cartan part and all R(Theta) root spaces
  AlgebraVector m_project(const AlgebraVector& v) const;

  // U(X_alpha, X_beta) = n_{alpha,beta}(lambda_beta - lambda_alpha)
  //                      / (2 lambda_{alpha+beta}) X_{alpha+beta}
  AlgebraVector u_map(RootId a, RootId b) const;

  // U solved from its defining identity 2g(U(v,w),Z) = g([Z,v]_m, w) + g(v, [Z,w]_m)
  // against all basis Z (independent route; used to cross-check u_map)
  AlgebraVector u_map_general(const AlgebraVector& v, const AlgebraVector& w) const;

  // bilinear extension of u_map
  AlgebraVector u_vec(const AlgebraVector& v, const AlgebraVector& w) const;

  // covariant derivative of invariant vector fields: (nabla_{X_a*} X_b*)_o
  AlgebraVector nabla(RootId a, RootId b) const;
  // bilinear extension of nabla = -1/2 [v,w]_m + U(v,w)
  AlgebraVector nabla_vec(const AlgebraVector& v, const AlgebraVector& w) const;
  // nabla on the real-form combinations A/S (bilinear expansion over X_{+-})
  AlgebraVector nabla_real(RealKind xk, RootId beta, RealKind yk, RootId alpha) const;

  // Nomizu operator of the connection: L(v)w = 1/2 [v,w]_m + U(v,w).
  // Invariant tensors are differentiated through it, e.g.
  // (nabla_v J)w = L(v)(Jw) - J(L(v)w).
  AlgebraVector nomizu(const AlgebraVector& v, const AlgebraVector& w) const;

  // (nabla_X J) Z
  AlgebraVector nabla_j(const AlgebraVector& x, const AlgebraVector& z) const;

  // (nabla_X Omega)(Y, Z) = g(Y, (nabla_X J) Z)
  CScalar cov_deriv_omega(const AlgebraVector& x, const AlgebraVector& y,
                          const AlgebraVector& z) const;

  // d Omega(X,Y,Z) = (1/3) * cyclic sum of cov_deriv_omega
  CScalar d_omega(const AlgebraVector& x, const AlgebraVector& y, const AlgebraVector& z) const;

  // one frame term (nabla_W Omega)(W, X) with W = V_beta or JV_beta
  CScalar codifferential_term(int pair_index, bool jpart, const AlgebraVector& x) const;

  // delta Omega(X): sum of both frame terms over R_Theta^+
  CScalar codifferential(const AlgebraVector& x) const;

  // N(X,Y) = 2([JX,JY]_m - J[JX,Y]_m - J[X,JY]_m - [X,Y]_m)
  AlgebraVector nijenhuis(const AlgebraVector& x, const AlgebraVector& y) const;

 private:
  const AHStructure* s_;
  ConnectionTable table_;
};

}  // namespace flagah
