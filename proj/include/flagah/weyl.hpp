#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "flagah/rootsys.hpp"
#include "flagah/scalar.hpp"

namespace flagah {

// Element of g = h (+) sum g_alpha in the Weyl basis: Cartan coordinates over
// {H_{alpha_1}, ..., H_{alpha_rank}} plus sparse root-space coefficients over
// the normalized root vectors {X_alpha}. Coefficients are complex; real-form
// vectors are the ones with the compact-conjugation symmetry.
class AlgebraVector {
 public:
  AlgebraVector() = default;
  explicit AlgebraVector(int rank) : cartan_(rank) {}

  static AlgebraVector x(RootId id, CScalar coeff = CScalar(1));
  static AlgebraVector cartan_basis(int rank, int j, CScalar coeff = CScalar(1));

  const std::vector<CScalar>& cartan() const { return cartan_; }
  bool has_cartan_part() const;

  const std::vector<std::pair<RootId, CScalar>>& root_terms() const { return roots_; }
  CScalar root_coeff(RootId id) const;

  void add_cartan(int j, const CScalar& c, int rank);
  void add_root(RootId id, const CScalar& c);
  void axpy(const CScalar& a, const AlgebraVector& v);  // *this += a*v

  AlgebraVector operator-() const;
  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b);
  friend AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b);
  friend AlgebraVector operator*(const CScalar& c, const AlgebraVector& v);

  bool is_zero() const { return roots_.empty() && !has_cartan_part(); }
  friend bool operator==(const AlgebraVector& a, const AlgebraVector& b);

 private:
  std::vector<CScalar> cartan_;  // may be empty (= no Cartan part)
  std::vector<std::pair<RootId, CScalar>> roots_;  // sorted by id, no zeros
};

// rendering like "(1/2)*X(a1) + (i*(1))*X(-a2) + (1)*H(1)"; "0" when zero
std::string vector_str(const RootSystem& rs, const AlgebraVector& v);

// entries of a sparse integer matrix: (row, col, value)
using SparseEntry = std::tuple<int, int, long>;

// Explicit matrix model backing the structure constants: sl(n+1) for A,
// so(2n+1) / sp(2n) / so(2n) in the block forms with diagonal Cartan.
struct Realization {
  int matrix_dim = 0;
  Rational trace_factor;  // Killing form = trace_factor * tr(XY)
  std::vector<std::vector<SparseEntry>> root_matrix;   // by root id (unnormalized)
  std::vector<std::vector<Rational>> cartan_diag;      // diag of H_{alpha_j}, by simple index
};

// Weyl basis with B(X_alpha, X_{-alpha}) = 1: structure constants n_{alpha,beta},
// Killing Gram matrix on the Cartan part, Riesz elements. Immutable.
class WeylBasis {
 public:
  static std::shared_ptr<const WeylBasis> build(std::shared_ptr<const RootSystem> rs);

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }

  // n_{alpha,beta}; zero scalar when alpha+beta is not a root
  const Scalar& n(RootId a, RootId b) const { return n_[a * rs_->num_roots() + b]; }

  // B(H_{alpha_i}, H_{alpha_j})
  const Rational& killing_h(int i, int j) const { return killing_h_[i][j]; }

  // coordinates of the Riesz element H_alpha over {H_{alpha_j}} (= the root's
  // own simple-basis coordinates, by linearity of alpha -> H_alpha)
  std::vector<Rational> riesz(RootId id) const;

  // alpha(H_{alpha_j}) = B(H_alpha, H_{alpha_j})
  const Rational& alpha_h(RootId alpha, int j) const { return alpha_h_[alpha][j]; }

  // alpha evaluated on a Cartan vector given by coordinates over {H_{alpha_j}}
  CScalar alpha_on(RootId alpha, const std::vector<CScalar>& cartan_coords) const;

  AlgebraVector bracket(const AlgebraVector& v, const AlgebraVector& w) const;
  CScalar killing(const AlgebraVector& v, const AlgebraVector& w) const;

  // normalization data: X_alpha = scale(alpha) * e_alpha with
  // t(alpha) = B(e_alpha, e_{-alpha}) and scale = 1/sqrt(t)
  const Rational& t(RootId id) const { return t_[id]; }
  const Scalar& scale(RootId id) const { return scale_[id]; }

  const Realization& realization() const { return realization_; }

 private:
  WeylBasis() = default;

  std::shared_ptr<const RootSystem> rs_;
  std::vector<Scalar> n_;
  std::vector<std::vector<Rational>> killing_h_;
  std::vector<std::vector<Rational>> alpha_h_;
  std::vector<Rational> t_;
  std::vector<Scalar> scale_;
  Realization realization_;
};

}  // namespace flagah
