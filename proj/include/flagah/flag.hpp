#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "flagah/weyl.hpp"

namespace flagah {

// Flag manifold F = G/P_Theta as root data: Theta, R(Theta), the complement
// R_Theta, the tangent space m and its isotropy summand partition.
class FlagManifold {
 public:
  // theta: 0-based indices into the simple system (ascending, no duplicates)
  static FlagManifold build(std::shared_ptr<const WeylBasis> wb, std::vector<int> theta);

  const WeylBasis& wb() const { return *wb_; }
  std::shared_ptr<const WeylBasis> wb_ptr() const { return wb_; }
  const RootSystem& rs() const { return wb_->rs(); }

  const std::vector<int>& theta() const { return theta_; }

  // R(Theta) = span(Theta) ∩ R, both signs
  const std::vector<RootId>& r_theta() const { return r_theta_; }
  // R_Theta = R \ R(Theta), both signs, canonical order
  const std::vector<RootId>& r_complement() const { return r_complement_; }
  // R_Theta^+ in canonical order
  const std::vector<RootId>& m_positive() const { return m_positive_; }

  bool in_r_theta(RootId id) const { return in_r_theta_[id]; }
  bool in_m(RootId id) const { return !in_r_theta_[id]; }

  int dim_real() const { return 2 * static_cast<int>(m_positive_.size()); }

  // isotropy summand partition of R_Theta^+; classes in canonical order
  const std::vector<std::vector<RootId>>& summands() const { return summands_; }
  int num_summands() const { return static_cast<int>(summands_.size()); }
  // class index of a complementary root (either sign)
  int summand_of(RootId id) const { return class_of_[rs().abs(id)]; }

  // generators of the complexified isotropy algebra k_Theta: the Cartan basis
  // plus X_beta for beta in R(Theta)
  std::vector<AlgebraVector> isotropy_generators() const;

  // real tangent basis [A_alpha, iS_alpha] interleaved over R_Theta^+
  std::vector<AlgebraVector> real_basis() const;
  // label for real_basis()[k], e.g. "A(a1)" / "iS(a1)"
  std::string real_basis_label(int k) const;

  // A_alpha = X_alpha - X_{-alpha}, iS_alpha = i X_alpha + i X_{-alpha}
  AlgebraVector a_vec(RootId pos) const;
  AlgebraVector is_vec(RootId pos) const;

 private:
  std::shared_ptr<const WeylBasis> wb_;
  std::vector<int> theta_;
  std::vector<RootId> r_theta_;
  std::vector<RootId> r_complement_;
  std::vector<RootId> m_positive_;
  std::vector<char> in_r_theta_;
  std::vector<std::vector<RootId>> summands_;
  std::vector<int> class_of_;
};

}  // namespace flagah
