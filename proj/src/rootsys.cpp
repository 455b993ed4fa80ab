#include "flagah/rootsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagah {

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown family '" + s + "' (expected A, B, C or D)");
}

std::string family_str(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
  }
  return "?";
}

namespace {

// columns = simple roots in Euclidean coordinates
std::vector<std::vector<int>> simple_euclid(Family family, int rank, int dim) {
  std::vector<std::vector<int>> simples;
  for (int i = 0; i + 1 < rank || (family == Family::A && i < rank); ++i) {
    std::vector<int> v(dim, 0);
    v[i] = 1;
    v[i + 1] = -1;
    simples.push_back(std::move(v));
  }
  std::vector<int> last(dim, 0);
  switch (family) {
    case Family::A:
      return simples;  // all of the form e_i - e_{i+1}
    case Family::B:
      last[rank - 1] = 1;
      break;
    case Family::C:
      last[rank - 1] = 2;
      break;
    case Family::D:
      last[rank - 2] = 1;
      last[rank - 1] = 1;
      break;
  }
  simples.push_back(std::move(last));
  return simples;
}

std::vector<std::vector<int>> positive_euclid(Family family, int rank, int dim) {
  std::vector<std::vector<int>> pos;
  auto vec = [dim](int i, int vi, int j, int vj) {
    std::vector<int> v(dim, 0);
    v[i] += vi;
    if (j >= 0) v[j] += vj;
    return v;
  };
  if (family == Family::A) {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) pos.push_back(vec(i, 1, j, -1));
    return pos;
  }
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      pos.push_back(vec(i, 1, j, -1));
      pos.push_back(vec(i, 1, j, 1));
    }
  }
  if (family == Family::B) {
    for (int i = 0; i < rank; ++i) pos.push_back(vec(i, 1, -1, 0));
  } else if (family == Family::C) {
    for (int i = 0; i < rank; ++i) pos.push_back(vec(i, 2, -1, 0));
  }
  return pos;
}

// solve M c = target exactly; M has full column rank and the system is
// consistent by construction
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> m,
                                  std::vector<Rational> target) {
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> pivot_row(cols, -1);
  int current = 0;
  for (int col = 0; col < cols; ++col) {
    int pr = -1;
    for (int r = current; r < rows; ++r) {
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    }
    if (pr < 0) throw std::logic_error("solve_exact: rank deficient system");
    std::swap(m[pr], m[current]);
    std::swap(target[pr], target[current]);
    for (int r = 0; r < rows; ++r) {
      if (r == current || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[current][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[current][c];
      target[r] -= f * target[current];
    }
    pivot_row[col] = current;
    ++current;
  }
  std::vector<Rational> sol(cols);
  for (int col = 0; col < cols; ++col) {
    sol[col] = target[pivot_row[col]] / m[pivot_row[col]][col];
  }
  // consistency of the remaining rows
  for (int r = current; r < rows; ++r) {
    if (target[r] != 0) throw std::logic_error("solve_exact: inconsistent system");
  }
  return sol;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(Family family, int rank) {
  const int min_rank = family == Family::A ? 1 : family == Family::D ? 3 : 2;
  if (rank < min_rank) {
    throw std::invalid_argument("family " + family_str(family) + " requires rank >= " +
                                std::to_string(min_rank) + ", got " + std::to_string(rank));
  }
  if (rank > 12) throw std::invalid_argument("rank too large (limit 12)");

  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->family_ = family;
  rs->rank_ = rank;
  rs->euclid_dim_ = family == Family::A ? rank + 1 : rank;

  const auto simples = simple_euclid(family, rank, rs->euclid_dim_);
  const auto pos = positive_euclid(family, rank, rs->euclid_dim_);

  std::vector<std::vector<Rational>> m(rs->euclid_dim_, std::vector<Rational>(rank));
  for (int r = 0; r < rs->euclid_dim_; ++r)
    for (int c = 0; c < rank; ++c) m[r][c] = Rational(simples[c][r]);

  struct Entry {
    Root root;
    std::vector<int> euclid;
  };
  std::vector<Entry> entries;
  for (const auto& e : pos) {
    std::vector<Rational> target(e.begin(), e.end());
    const auto sol = solve_exact(m, target);
    Root root;
    for (const auto& q : sol) {
      if (denominator(q) != 1) throw std::logic_error("non-integral simple-root coordinate");
      root.coords.push_back(static_cast<int>(numerator(q)));
    }
    for (int c : root.coords) {
      if (c < 0) throw std::logic_error("negative coordinate on a positive root");
    }
    entries.push_back({std::move(root), e});
  }

  // height ascending, then reverse-lexicographic on coordinates so that roots
  // supported on earlier simple roots come first (a(1,2) before a(2,3))
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    const int ha = a.root.height(), hb = b.root.height();
    if (ha != hb) return ha < hb;
    return a.root.coords > b.root.coords;
  });

  for (const auto& e : entries) {
    rs->roots_.push_back(e.root);
    rs->euclid_.push_back(e.euclid);
  }
  const int p = static_cast<int>(entries.size());
  for (int k = 0; k < p; ++k) {
    Root neg;
    std::vector<int> ne;
    for (int c : entries[k].root.coords) neg.coords.push_back(-c);
    for (int c : entries[k].euclid) ne.push_back(-c);
    rs->roots_.push_back(std::move(neg));
    rs->euclid_.push_back(std::move(ne));
  }
  for (int id = 0; id < rs->num_roots(); ++id) rs->index_[rs->roots_[id].coords] = id;

  rs->simples_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    Root s;
    s.coords.assign(rank, 0);
    s.coords[i] = 1;
    const RootId id = rs->find(s);
    if (id == kNoRoot) throw std::logic_error("simple root missing from enumeration");
    rs->simples_[i] = id;
  }

  rs->cartan_.assign(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      const int num = 2 * dot(simples[i], simples[j]);
      const int den = dot(simples[j], simples[j]);
      if (num % den != 0) throw std::logic_error("non-integral Cartan pairing");
      rs->cartan_[i][j] = num / den;
    }
  }
  return rs;
}

RootId RootSystem::find(const Root& r) const {
  const auto it = index_.find(r.coords);
  return it == index_.end() ? kNoRoot : it->second;
}

RootId RootSystem::sum_root(RootId a, RootId b) const {
  Root s;
  s.coords.resize(rank_);
  for (int k = 0; k < rank_; ++k) s.coords[k] = roots_[a].coords[k] + roots_[b].coords[k];
  return find(s);
}

std::string RootSystem::label(RootId id) const {
  if (family_ == Family::A) {
    int i = -1, j = -1;
    for (int k = 0; k < euclid_dim_; ++k) {
      if (euclid_[id][k] == 1) i = k;
      if (euclid_[id][k] == -1) j = k;
    }
    return "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  }
  std::string out;
  const auto& c = roots_[id].coords;
  for (int k = 0; k < rank_; ++k) {
    if (c[k] == 0) continue;
    if (c[k] > 0 && !out.empty()) out += "+";
    if (c[k] == -1) out += "-";
    else if (c[k] != 1) out += std::to_string(c[k]);
    out += "a" + std::to_string(k + 1);
  }
  return out;
}

}  // namespace flagah
