#pragma once

#include <string>
#include <vector>

#include "flagah/flag.hpp"

namespace flagah {

// Invariant metric: one positive rational lambda per isotropy summand.
struct InvariantMetric {
  std::vector<Rational> lambda;  // by summand class index
};

// Invariant almost complex structure: one sign per isotropy summand,
// extended to roots by eps_alpha = sign(class(alpha)) for alpha in R_Theta^+
// and eps_{-alpha} = -eps_alpha.
struct IACS {
  std::vector<int> epsilon;  // +1 / -1 by summand class index
};

// One invariant almost Hermitian structure (F, g, J).
//
// The metric is the positive-definite inner product -lambda.B on m, extended
// complex-bilinearly to m^C; on the Weyl basis g(X_alpha, X_{-alpha}) =
// -lambda_alpha (so g(A_alpha, A_alpha) = g(iS_alpha, iS_alpha) = 2 lambda_alpha
// and the frame {V_alpha, JV_alpha} is orthonormal with norm +1).
class AHStructure {
 public:
  static AHStructure build(FlagManifold flag, InvariantMetric g, IACS j);

  const FlagManifold& flag() const { return flag_; }
  const WeylBasis& wb() const { return flag_.wb(); }
  const RootSystem& rs() const { return flag_.rs(); }

  const InvariantMetric& metric() const { return g_; }
  const IACS& iacs() const { return j_; }

  // lambda / epsilon per complementary root (either sign)
  const Rational& lambda(RootId id) const { return lambda_by_root_[id]; }
  int epsilon(RootId id) const { return eps_by_root_[id]; }

  // g(v, w) for v, w in m^C; rejects Cartan parts and support in R(Theta)
  CScalar metric_eval(const AlgebraVector& v, const AlgebraVector& w) const;

  // throws std::domain_error unless v lies in m^C
  void assert_in_m(const AlgebraVector& v, const char* who) const { check_in_m(v, who); }

  // J v = linear extension of X_alpha -> i eps_alpha X_alpha
  AlgebraVector apply_j(const AlgebraVector& v) const;

  // Omega(v, w) = g(v, Jw)
  CScalar omega(const AlgebraVector& v, const AlgebraVector& w) const;

  // global orthonormal J-frame (V_alpha, JV_alpha), alpha in R_Theta^+:
  // V_alpha = A_alpha / sqrt(2 lambda_alpha), JV_alpha = i eps_alpha S_alpha / sqrt(2 lambda_alpha)
  struct FramePair {
    AlgebraVector v;
    AlgebraVector jv;
  };
  const std::vector<FramePair>& j_frame() const { return frame_; }
  std::string frame_label(int pair_index, bool jpart) const;

 private:
  void check_in_m(const AlgebraVector& v, const char* who) const;

  FlagManifold flag_;
  InvariantMetric g_;
  IACS j_;
  std::vector<Rational> lambda_by_root_;
  std::vector<int> eps_by_root_;
  std::vector<FramePair> frame_;
};

}  // namespace flagah
