#pragma once

#include <memory>
#include <string>
#include <vector>

#include "flagah/classify.hpp"
#include "flagah/geometry.hpp"

namespace flagah::testing {

// full basis of g: H_{alpha_1}..H_{alpha_rank}, then all X_gamma
inline std::vector<AlgebraVector> algebra_basis(const WeylBasis& wb) {
  std::vector<AlgebraVector> basis;
  const int rank = wb.rs().rank();
  for (int j = 0; j < rank; ++j) basis.push_back(AlgebraVector::cartan_basis(rank, j));
  for (RootId id = 0; id < wb.rs().num_roots(); ++id) basis.push_back(AlgebraVector::x(id));
  return basis;
}

// coefficient of basis element k (in algebra_basis order) inside v
inline CScalar basis_coeff(const WeylBasis& wb, const AlgebraVector& v, int k) {
  const int rank = wb.rs().rank();
  if (k < rank) return v.cartan().empty() ? CScalar() : v.cartan()[k];
  return v.root_coeff(k - rank);
}

// Killing form computed as tr(ad u . ad v) over the basis; independent of the
// trace-factor used to normalize the realization
inline CScalar ad_killing(const WeylBasis& wb, const AlgebraVector& u, const AlgebraVector& v) {
  const auto basis = algebra_basis(wb);
  CScalar tr;
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    const AlgebraVector w = wb.bracket(u, wb.bracket(v, basis[k]));
    tr += basis_coeff(wb, w, k);
  }
  return tr;
}

inline AHStructure make_structure(Family fam, int rank, std::vector<int> theta,
                                  std::vector<long> lambda_num, std::vector<int> eps) {
  auto rs = RootSystem::build(fam, rank);
  auto wb = WeylBasis::build(rs);
  FlagManifold f = FlagManifold::build(wb, std::move(theta));
  InvariantMetric g;
  for (long l : lambda_num) g.lambda.emplace_back(l);
  IACS j;
  j.epsilon = std::move(eps);
  return AHStructure::build(std::move(f), std::move(g), std::move(j));
}

inline AHStructure make_random_structure(Family fam, int rank, std::vector<int> theta,
                                         std::vector<int> eps, std::uint64_t seed) {
  auto rs = RootSystem::build(fam, rank);
  auto wb = WeylBasis::build(rs);
  FlagManifold f = FlagManifold::build(wb, std::move(theta));
  InvariantMetric g = random_metric(f, seed);
  IACS j;
  if (eps.empty()) eps.assign(f.num_summands(), 1);
  j.epsilon = std::move(eps);
  return AHStructure::build(std::move(f), std::move(g), std::move(j));
}

}  // namespace flagah::testing
