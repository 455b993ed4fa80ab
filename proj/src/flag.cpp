#include "flagah/flag.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace flagah {

FlagManifold FlagManifold::build(std::shared_ptr<const WeylBasis> wb, std::vector<int> theta) {
  FlagManifold f;
  f.wb_ = std::move(wb);
  const RootSystem& rs = f.rs();
  const int rank = rs.rank();

  std::sort(theta.begin(), theta.end());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    if (theta[k] < 0 || theta[k] >= rank) {
      throw std::invalid_argument("theta index " + std::to_string(theta[k] + 1) +
                                  " out of range for rank " + std::to_string(rank));
    }
    if (k > 0 && theta[k] == theta[k - 1]) {
      throw std::invalid_argument("duplicate theta index " + std::to_string(theta[k] + 1));
    }
  }
  f.theta_ = theta;

  std::vector<char> in_theta(rank, 0);
  for (int t : theta) in_theta[t] = 1;

  // a root lies in span(Theta) iff its simple coordinates vanish off Theta
  f.in_r_theta_.assign(rs.num_roots(), 0);
  for (RootId id = 0; id < rs.num_roots(); ++id) {
    bool inside = true;
    const auto& c = rs.root(id).coords;
    for (int j = 0; j < rank; ++j) {
      if (c[j] != 0 && !in_theta[j]) {
        inside = false;
        break;
      }
    }
    f.in_r_theta_[id] = inside ? 1 : 0;
    if (inside) {
      f.r_theta_.push_back(id);
    } else {
      f.r_complement_.push_back(id);
      if (rs.is_positive(id)) f.m_positive_.push_back(id);
    }
  }

  // summands: fibers of the restriction of alpha to the center of k_Theta,
  // i.e. of the coordinates on the simple roots outside Theta (t-roots)
  std::map<std::vector<int>, std::vector<RootId>> fibers;
  for (RootId id : f.m_positive_) {
    std::vector<int> key;
    for (int j = 0; j < rank; ++j) {
      if (!in_theta[j]) key.push_back(rs.root(id).coords[j]);
    }
    fibers[key].push_back(id);
  }
  f.class_of_.assign(rs.num_roots(), -1);
  // class order: by smallest member in canonical root order
  std::vector<std::vector<RootId>> classes;
  for (auto& [key, ids] : fibers) classes.push_back(ids);
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    for (RootId id : classes[c]) f.class_of_[id] = c;
  }
  f.summands_ = std::move(classes);
  return f;
}

std::vector<AlgebraVector> FlagManifold::isotropy_generators() const {
  std::vector<AlgebraVector> gens;
  const int rank = rs().rank();
  for (int j = 0; j < rank; ++j) gens.push_back(AlgebraVector::cartan_basis(rank, j));
  for (RootId id : r_theta_) gens.push_back(AlgebraVector::x(id));
  return gens;
}

AlgebraVector FlagManifold::a_vec(RootId pos) const {
  AlgebraVector v = AlgebraVector::x(pos);
  v.add_root(rs().negate(pos), CScalar(-1));
  return v;
}

AlgebraVector FlagManifold::is_vec(RootId pos) const {
  AlgebraVector v = AlgebraVector::x(pos, CScalar::i());
  v.add_root(rs().negate(pos), CScalar::i());
  return v;
}

std::vector<AlgebraVector> FlagManifold::real_basis() const {
  std::vector<AlgebraVector> basis;
  basis.reserve(2 * m_positive_.size());
  for (RootId id : m_positive_) {
    basis.push_back(a_vec(id));
    basis.push_back(is_vec(id));
  }
  return basis;
}

std::string FlagManifold::real_basis_label(int k) const {
  const RootId id = m_positive_[k / 2];
  const std::string root = rs().label(id);
  return (k % 2 == 0 ? "A(" : "iS(") + root + ")";
}

}  // namespace flagah
