#pragma once

#include <memory>
#include <optional>

#include "flagah/classify.hpp"
#include "flagah/linalg.hpp"

namespace flagah {

enum class SubKind { subflag, subalgebra };

struct SubWitness {
  std::string where;
  std::string value;
};

// Exact certificate for one invariant holomorphic submanifold.
struct SubCertificate {
  bool holomorphic = true;
  bool totally_geodesic = true;        // second fundamental form == 0
  bool mean_curvature_zero = true;     // H == 0
  bool normal_partial_codiff_zero = true;  // delta-bar Omega == 0 on the normal frame
  bool minimal = true;                 // both of the above
  bool minimal_identity = true;        // delta-bar Omega(Z) == 2r g(JH, Z), termwise
  bool split_identity = true;          // delta = delta' + delta-double-bar on n
  bool normal_codiff_zero = true;      // delta-double-bar Omega == 0 termwise
  bool comp_equal = true;              // [X,Y]_n == [X,Y]_m on tangent root pairs (sub-flags)
  bool classes_checked = false;
  ClassReport ambient_classes;
  ClassReport intrinsic_classes;
  std::map<std::string, bool> class_preserved;  // ambient member => submanifold member
  std::map<std::string, SubWitness> failures;
  // sub-flags must come out minimal and totally geodesic; a failure here
  // signals an implementation bug, not a property of the input
  bool required_outcomes_ok = true;
};

struct CertifyOptions {
  bool check_classes = true;
  bool check_split_identity = true;  // the full-frame codifferential split, the costly part
  Exec exec = Exec::parallel;
};

// Invariant holomorphic submanifold of a flag manifold: either the sub-flag
// of a sub-simple-system Theta' (tangent space spanned by X_alpha over
// R' \ R(Theta)) or the orbit of a bracket-closed subalgebra l of the compact
// form, with n = the g-orthocomplement of l∩k_Theta in l.
class Submanifold {
 public:
  static Submanifold build_subflag(AHStructure s, std::vector<int> theta_prime);
  static Submanifold build_from_subalgebra(AHStructure s,
                                           const std::vector<AlgebraVector>& generators);

  const AHStructure& ambient() const { return *s_; }
  const Geometry& geo() const { return geo_; }
  SubKind kind() const { return kind_; }

  const std::vector<int>& theta_prime() const { return theta_prime_; }
  const std::vector<RootId>& r_prime() const { return r_prime_; }  // sub-flag only
  const std::vector<RootId>& r_n() const { return r_n_; }

  // adapted g-orthonormal J-frame of n / of its orthogonal complement
  const std::vector<AHStructure::FramePair>& n_frame() const { return n_frame_; }
  const std::vector<AHStructure::FramePair>& n_perp_frame() const { return n_perp_frame_; }

  int dim_real() const { return 2 * static_cast<int>(n_frame_.size()); }
  int codimension() const;

  bool in_n(const AlgebraVector& v) const;
  // g-orthogonal projections of the m-part of v
  AlgebraVector project_n(const AlgebraVector& v) const;
  AlgebraVector project_n_perp(const AlgebraVector& v) const;

  // intrinsic data: U', nabla' and the Nomizu operator of the submanifold,
  // built from first principles on n (not by restricting the ambient table)
  AlgebraVector u_prime(const AlgebraVector& x, const AlgebraVector& y) const;
  AlgebraVector nabla_prime(const AlgebraVector& x, const AlgebraVector& y) const;
  AlgebraVector nomizu_prime(const AlgebraVector& x, const AlgebraVector& y) const;
  AlgebraVector nabla_j_prime(const AlgebraVector& x, const AlgebraVector& z) const;
  CScalar cov_deriv_omega_prime(const AlgebraVector& x, const AlgebraVector& y,
                                const AlgebraVector& z) const;

  // alpha(X,Y) = (nabla_X Y) - (nabla'_X Y), valued in the normal space
  AlgebraVector second_fundamental_form(const AlgebraVector& x, const AlgebraVector& y) const;

  // H = (1/2r) sum of alpha(E_i,E_i) + alpha(JE_i,JE_i) over the tangent frame
  AlgebraVector mean_curvature() const;

  // frame sums of the ambient (nabla Omega): over the tangent frame and over
  // the normal frame, respectively
  CScalar partial_codifferential(const AlgebraVector& x) const;
  CScalar normal_codifferential(const AlgebraVector& x) const;

  // codifferential of the submanifold itself (intrinsic connection); x in n
  CScalar intrinsic_codifferential(const AlgebraVector& x) const;

  // Gray-Hervella scan of the induced structure on n
  ClassReport classify_intrinsic(Exec exec = Exec::parallel) const;

  SubCertificate certify(const CertifyOptions& opts = {}) const;

 private:
  Submanifold(std::shared_ptr<const AHStructure> s)
      : s_(std::move(s)), geo_(*s_), n_span_(0) {}

  void finish_common();              // coord tables + normal frame from r_n_
  void finish_common_coords_only();  // just the dense coordinate tables
  AlgebraVector n_project_bracket(const AlgebraVector& x, const AlgebraVector& y) const;

  std::shared_ptr<const AHStructure> s_;
  Geometry geo_;
  SubKind kind_ = SubKind::subflag;
  std::vector<int> theta_prime_;
  std::vector<RootId> r_prime_;
  std::vector<RootId> r_n_;
  std::vector<RootId> tangent_pos_;  // sub-flag tangent positive roots (= r_n_)
  std::vector<AHStructure::FramePair> n_frame_;
  std::vector<AHStructure::FramePair> n_perp_frame_;
  SpanBasis n_span_;                  // complex span of n over R_Theta coordinates
  std::vector<int> coord_of_root_;    // RootId -> dense position, -1 outside R_Theta
  std::vector<RootId> root_of_coord_;
};

}  // namespace flagah
