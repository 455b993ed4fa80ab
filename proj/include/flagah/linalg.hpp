#pragma once

#include <vector>

#include "flagah/scalar.hpp"

namespace flagah {

// Row-echelon span of dense CScalar vectors. Pivots are normalized to 1;
// normalization divides by the pivot entry, which must be invertible within
// the radical field (single-term real and imaginary parts). Inputs outside
// that shape are rejected with a diagnostic instead of being approximated.
class SpanBasis {
 public:
  explicit SpanBasis(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<CScalar>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // reduces v against the rows in place; afterwards v is zero iff it was in the span
  void reduce(std::vector<CScalar>& v) const;

  bool contains(std::vector<CScalar> v) const;

  // inserts v if it enlarges the span; returns true when the rank grew
  bool insert(std::vector<CScalar> v);

 private:
  int dim_;
  std::vector<std::vector<CScalar>> rows_;  // sorted by pivot position
  std::vector<int> pivots_;
};

// kernel of the linear map x -> M x (columns = unknowns), as column vectors
std::vector<std::vector<CScalar>> kernel_basis(const std::vector<std::vector<CScalar>>& m,
                                               int cols);

}  // namespace flagah
