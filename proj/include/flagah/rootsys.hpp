#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flagah/rational.hpp"

namespace flagah {

enum class Family { A, B, C, D };

Family parse_family(const std::string& s);
std::string family_str(Family f);

using RootId = int;
inline constexpr RootId kNoRoot = -1;

// A root, stored as its integer coordinate vector in the simple-root basis.
struct Root {
  std::vector<int> coords;

  int height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
  }
  friend bool operator==(const Root&, const Root&) = default;
};

// Root system of classical type A/B/C/D with Bourbaki simple roots.
// Positive roots come first in `roots`, sorted by (height, coords lex),
// followed by their negatives in the same order.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }

  const std::vector<Root>& roots() const { return roots_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }

  const Root& root(RootId id) const { return roots_[id]; }
  bool is_positive(RootId id) const { return id < num_positive(); }
  RootId negate(RootId id) const {
    return is_positive(id) ? id + num_positive() : id - num_positive();
  }
  // positive root of the pair {id, -id}
  RootId abs(RootId id) const { return is_positive(id) ? id : negate(id); }

  // simple root alpha_i (0-based Bourbaki index) as a RootId
  RootId simple(int i) const { return simples_[i]; }

  RootId find(const Root& r) const;

  // alpha + beta when it is a root, kNoRoot otherwise (also for alpha = -beta)
  RootId sum_root(RootId a, RootId b) const;

  // Cartan matrix <alpha_i, alpha_j^vee>
  const std::vector<std::vector<int>>& cartan_pairing() const { return cartan_; }

  // coordinates in the standard Euclidean realization (dimension rank, or
  // rank+1 for family A); used by the matrix realization of the algebra
  const std::vector<int>& euclid_coords(RootId id) const { return euclid_[id]; }
  int euclid_dim() const { return euclid_dim_; }

  // human-readable label, e.g. "a1+2a2"; negatives as "-a1-2a2".
  // For family A also of the form a(i,j) <-> e_i - e_j.
  std::string label(RootId id) const;

 private:
  RootSystem() = default;

  Family family_{};
  int rank_ = 0;
  int euclid_dim_ = 0;
  std::vector<Root> roots_;
  std::vector<std::vector<int>> euclid_;
  std::vector<RootId> simples_;
  std::vector<std::vector<int>> cartan_;
  std::map<std::vector<int>, RootId> index_;
};

}  // namespace flagah
