#include "flagah/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagah {

void SpanBasis::reduce(std::vector<CScalar>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const CScalar& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const CScalar factor = c;  // pivot entries are 1
    for (int k = pivots_[r]; k < dim_; ++k) {
      if (!rows_[r][k].is_zero()) v[k] -= factor * rows_[r][k];
    }
  }
}

bool SpanBasis::contains(std::vector<CScalar> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const CScalar& c) { return c.is_zero(); });
}

bool SpanBasis::insert(std::vector<CScalar> v) {
  reduce(v);
  int pivot = -1;
  for (int k = 0; k < dim_; ++k) {
    if (!v[k].is_zero()) {
      pivot = k;
      break;
    }
  }
  if (pivot < 0) return false;
  const CScalar inv = v[pivot].reciprocal();  // throws on non-invertible pivots
  for (int k = pivot; k < dim_; ++k) v[k] = inv * v[k];
  const auto at =
      std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + at, pivot);
  rows_.insert(rows_.begin() + at, std::move(v));
  return true;
}

std::vector<std::vector<CScalar>> kernel_basis(const std::vector<std::vector<CScalar>>& m,
                                               int cols) {
  // row-reduce a copy, tracking pivot columns
  std::vector<std::vector<CScalar>> rows = m;
  std::vector<int> pivot_col;
  std::size_t current = 0;
  for (int col = 0; col < cols && current < rows.size(); ++col) {
    std::size_t pr = current;
    while (pr < rows.size() && rows[pr][col].is_zero()) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[current]);
    const CScalar inv = rows[current][col].reciprocal();
    for (int k = col; k < cols; ++k) rows[current][k] = inv * rows[current][k];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == current || rows[r][col].is_zero()) continue;
      const CScalar f = rows[r][col];
      for (int k = col; k < cols; ++k) rows[r][k] -= f * rows[current][k];
    }
    pivot_col.push_back(col);
    ++current;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<CScalar>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<CScalar> v(cols);
    v[free] = CScalar(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      v[pivot_col[r]] = -rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace flagah
