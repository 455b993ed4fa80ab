#include "flagah/weyl.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace flagah {

AlgebraVector AlgebraVector::x(RootId id, CScalar coeff) {
  AlgebraVector v;
  v.add_root(id, coeff);
  return v;
}

AlgebraVector AlgebraVector::cartan_basis(int rank, int j, CScalar coeff) {
  AlgebraVector v(rank);
  v.cartan_[j] = std::move(coeff);
  return v;
}

bool AlgebraVector::has_cartan_part() const {
  for (const auto& c : cartan_) {
    if (!c.is_zero()) return true;
  }
  return false;
}

CScalar AlgebraVector::root_coeff(RootId id) const {
  const auto it = std::lower_bound(roots_.begin(), roots_.end(), id,
                                   [](const auto& p, RootId q) { return p.first < q; });
  if (it != roots_.end() && it->first == id) return it->second;
  return CScalar();
}

void AlgebraVector::add_cartan(int j, const CScalar& c, int rank) {
  if (cartan_.empty()) cartan_.resize(rank);
  cartan_[j] += c;
}

void AlgebraVector::add_root(RootId id, const CScalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(roots_.begin(), roots_.end(), id,
                             [](const auto& p, RootId q) { return p.first < q; });
  if (it != roots_.end() && it->first == id) {
    it->second += c;
    if (it->second.is_zero()) roots_.erase(it);
  } else {
    roots_.insert(it, {id, c});
  }
}

void AlgebraVector::axpy(const CScalar& a, const AlgebraVector& v) {
  if (a.is_zero()) return;
  if (!v.cartan_.empty()) {
    if (cartan_.empty()) cartan_.resize(v.cartan_.size());
    for (std::size_t j = 0; j < v.cartan_.size(); ++j) cartan_[j] += a * v.cartan_[j];
  }
  for (const auto& [id, c] : v.roots_) add_root(id, a * c);
}

AlgebraVector AlgebraVector::operator-() const {
  AlgebraVector r;
  r.axpy(CScalar(-1), *this);
  return r;
}

AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) {
  a.axpy(CScalar(1), b);
  return a;
}

AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) {
  a.axpy(CScalar(-1), b);
  return a;
}

AlgebraVector operator*(const CScalar& c, const AlgebraVector& v) {
  AlgebraVector r;
  r.axpy(c, v);
  return r;
}

bool operator==(const AlgebraVector& a, const AlgebraVector& b) {
  if (a.roots_ != b.roots_) return false;
  const std::size_t n = std::max(a.cartan_.size(), b.cartan_.size());
  for (std::size_t j = 0; j < n; ++j) {
    const CScalar ca = j < a.cartan_.size() ? a.cartan_[j] : CScalar();
    const CScalar cb = j < b.cartan_.size() ? b.cartan_[j] : CScalar();
    if (ca != cb) return false;
  }
  return true;
}

std::string vector_str(const RootSystem& rs, const AlgebraVector& v) {
  std::string out;
  auto append = [&out](const CScalar& c, const std::string& base) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*" + base;
  };
  for (std::size_t j = 0; j < v.cartan().size(); ++j) {
    if (!v.cartan()[j].is_zero()) append(v.cartan()[j], "H(" + std::to_string(j + 1) + ")");
  }
  for (const auto& [id, c] : v.root_terms()) append(c, "X(" + rs.label(id) + ")");
  return out.empty() ? "0" : out;
}

namespace {

// weight of coordinate k in the defining representation: the diagonal Cartan
// acts on basis vector k with eigenvalue weight(k) . h
std::vector<int> coordinate_weight(Family family, int rank, int k) {
  std::vector<int> w(rank, 0);
  if (family == Family::A) {
    // handled separately (dimension rank+1); never called
    throw std::logic_error("coordinate_weight: family A not used");
  }
  if (k < rank) {
    w[k] = 1;
  } else if (k < 2 * rank) {
    w[k - rank] = -1;
  }
  return w;
}

std::vector<SparseEntry> transpose(const std::vector<SparseEntry>& m) {
  std::vector<SparseEntry> r;
  for (const auto& [i, j, v] : m) r.emplace_back(j, i, v);
  return r;
}

std::map<std::pair<int, int>, long> sparse_to_map(const std::vector<SparseEntry>& m) {
  std::map<std::pair<int, int>, long> r;
  for (const auto& [i, j, v] : m) r[{i, j}] += v;
  return r;
}

std::map<std::pair<int, int>, long> commutator(const std::vector<SparseEntry>& a,
                                               const std::vector<SparseEntry>& b) {
  std::map<std::pair<int, int>, long> r;
  for (const auto& [i1, j1, v1] : a) {
    for (const auto& [i2, j2, v2] : b) {
      if (j1 == i2) r[{i1, j2}] += v1 * v2;
      if (j2 == i1) r[{i2, j1}] -= v1 * v2;
    }
  }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

}  // namespace

std::shared_ptr<const WeylBasis> WeylBasis::build(std::shared_ptr<const RootSystem> rs_in) {
  auto wb = std::shared_ptr<WeylBasis>(new WeylBasis());
  wb->rs_ = std::move(rs_in);
  const RootSystem& rs = *wb->rs_;
  const int rank = rs.rank();
  const int nr = rs.num_roots();
  const int np = rs.num_positive();
  const Family fam = rs.family();

  Realization& real = wb->realization_;
  switch (fam) {
    case Family::A:
      real.matrix_dim = rank + 1;
      real.trace_factor = Rational(2 * (rank + 1));
      break;
    case Family::B:
      real.matrix_dim = 2 * rank + 1;
      real.trace_factor = Rational(2 * rank - 1);
      break;
    case Family::C:
      real.matrix_dim = 2 * rank;
      real.trace_factor = Rational(2 * rank + 2);
      break;
    case Family::D:
      real.matrix_dim = 2 * rank;
      real.trace_factor = Rational(2 * rank - 2);
      break;
  }

  // root vectors of the matrix model, positives first, negatives = transposes
  real.root_matrix.resize(nr);
  for (RootId id = 0; id < np; ++id) {
    const auto& e = rs.euclid_coords(id);
    std::vector<SparseEntry> m;
    if (fam == Family::A) {
      int i = -1, j = -1;
      for (int k = 0; k < rs.euclid_dim(); ++k) {
        if (e[k] == 1) i = k;
        if (e[k] == -1) j = k;
      }
      m = {{i, j, 1}};
    } else {
      int i = -1, j = -1;  // e = e_i - e_j, e_i + e_j, e_i or 2e_i
      for (int k = 0; k < rank; ++k) {
        if (e[k] != 0) {
          if (i < 0) i = k;
          else j = k;
        }
      }
      const int n = rank;
      if (e[i] == 2) {  // 2e_i (family C)
        m = {{i, n + i, 1}};
      } else if (j < 0) {  // e_i (family B)
        m = {{i, 2 * n, 1}, {2 * n, n + i, -1}};
      } else if (e[j] == -1) {  // e_i - e_j
        m = {{i, j, 1}, {n + j, n + i, -1}};
      } else if (fam == Family::C) {  // e_i + e_j, symmetric block
        m = {{i, n + j, 1}, {j, n + i, 1}};
      } else {  // e_i + e_j, antisymmetric block
        m = {{i, n + j, 1}, {j, n + i, -1}};
      }
    }
    real.root_matrix[id] = std::move(m);
    real.root_matrix[rs.negate(id)] = transpose(real.root_matrix[id]);
  }

  // weight check: every entry (r,c) of e_alpha must carry weight alpha
  for (RootId id = 0; id < nr; ++id) {
    for (const auto& [r, c, v] : real.root_matrix[id]) {
      std::vector<int> w(rs.euclid_dim(), 0);
      if (fam == Family::A) {
        w[r] += 1;
        w[c] -= 1;
      } else {
        const auto wr = coordinate_weight(fam, rank, r);
        const auto wc = coordinate_weight(fam, rank, c);
        for (int k = 0; k < rank; ++k) w[k] = wr[k] - wc[k];
      }
      if (w != rs.euclid_coords(id)) throw std::logic_error("realization: wrong weight entry");
    }
  }

  // t_alpha = B(e_alpha, e_alpha^T) = trace_factor * sum of squared entries
  wb->t_.resize(nr);
  wb->scale_.resize(nr);
  for (RootId id = 0; id < nr; ++id) {
    long ss = 0;
    for (const auto& [r, c, v] : real.root_matrix[id]) ss += v * v;
    wb->t_[id] = real.trace_factor * Rational(ss);
    wb->scale_[id] = Scalar::sqrt_rational(Rational(1) / wb->t_[id]);
  }

  // Cartan realization: H_{alpha_j} as a diagonal matrix, from the Riesz
  // property alpha_j(H') = trace_factor * tr(H' H) for all Cartan H'
  real.cartan_diag.resize(rank);
  for (int j = 0; j < rank; ++j) {
    const auto& a = rs.euclid_coords(rs.simple(j));
    std::vector<Rational> diag(real.matrix_dim, Rational(0));
    if (fam == Family::A) {
      Rational mean(0);
      for (int k = 0; k < rs.euclid_dim(); ++k) mean += Rational(a[k]);
      mean /= Rational(rs.euclid_dim());
      for (int k = 0; k < rs.euclid_dim(); ++k)
        diag[k] = (Rational(a[k]) - mean) / real.trace_factor;
    } else {
      for (int k = 0; k < rank; ++k) {
        diag[k] = Rational(a[k]) / (Rational(2) * real.trace_factor);
        diag[rank + k] = -diag[k];
      }
    }
    real.cartan_diag[j] = std::move(diag);
  }

  // killing_h[i][j] = B(H_i, H_j) = alpha_i(H_j); alpha_h[id][j] = alpha(H_j)
  auto eval_on_cartan = [&](RootId id, int j) {
    Rational s(0);
    const auto& e = rs.euclid_coords(id);
    const auto& diag = real.cartan_diag[j];
    const int terms = fam == Family::A ? rs.euclid_dim() : rank;
    for (int k = 0; k < terms; ++k) s += Rational(e[k]) * diag[k];
    return s;
  };
  wb->killing_h_.assign(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) wb->killing_h_[i][j] = eval_on_cartan(rs.simple(i), j);
  wb->alpha_h_.resize(nr);
  for (RootId id = 0; id < nr; ++id) {
    wb->alpha_h_[id].resize(rank);
    for (int j = 0; j < rank; ++j) wb->alpha_h_[id][j] = eval_on_cartan(id, j);
  }

  // structure constants from the realization, rescaled:
  // n_{a,b} = craw * sqrt(t_{a+b} / (t_a t_b))
  wb->n_.assign(static_cast<std::size_t>(nr) * nr, Scalar());
  for (RootId a = 0; a < nr; ++a) {
    for (RootId b = 0; b < nr; ++b) {
      const auto comm = commutator(real.root_matrix[a], real.root_matrix[b]);
      const RootId sum = rs.sum_root(a, b);
      if (sum == kNoRoot) {
        if (a == rs.negate(b)) {
          // [e_a, e_{-a}] scaled by 1/t_a must equal the Riesz element H_a
          std::map<std::pair<int, int>, long> expect;
          bool ok = true;
          for (const auto& [pos, v] : comm) {
            if (pos.first != pos.second) ok = false;
          }
          const auto coords = rs.root(a).coords;
          for (int k = 0; k < real.matrix_dim && ok; ++k) {
            Rational h(0);
            for (int j = 0; j < rank; ++j) h += Rational(coords[j]) * real.cartan_diag[j][k];
            auto it = comm.find({k, k});
            const Rational got = it == comm.end() ? Rational(0) : Rational(it->second);
            if (got != h * wb->t_[a]) ok = false;
          }
          if (!ok) throw std::logic_error("realization: [e_a, e_{-a}] != t_a * H_a");
        } else if (!comm.empty()) {
          throw std::logic_error("realization: nonzero bracket outside the root system");
        }
        continue;
      }
      // comm must be an integer multiple of e_{a+b}
      const auto target = sparse_to_map(real.root_matrix[sum]);
      if (comm.empty()) throw std::logic_error("realization: zero bracket on a root pair");
      const auto& [tpos, tval] = *target.begin();
      const auto it = comm.find(tpos);
      if (it == comm.end() || it->second % tval != 0) {
        throw std::logic_error("realization: bracket not proportional to root vector");
      }
      const long craw = it->second / tval;
      for (const auto& [pos, v] : target) {
        auto c = comm.find(pos);
        if (c == comm.end() || c->second != craw * v) {
          throw std::logic_error("realization: bracket not proportional to root vector");
        }
      }
      if (comm.size() != target.size()) {
        throw std::logic_error("realization: bracket has extra support");
      }
      wb->n_[a * nr + b] =
          Scalar(Rational(craw)) *
          Scalar::sqrt_rational(wb->t_[sum] / (wb->t_[a] * wb->t_[b]));
    }
  }
  return wb;
}

std::vector<Rational> WeylBasis::riesz(RootId id) const {
  std::vector<Rational> r;
  for (int c : rs_->root(id).coords) r.emplace_back(c);
  return r;
}

CScalar WeylBasis::alpha_on(RootId alpha, const std::vector<CScalar>& cartan_coords) const {
  CScalar s;
  for (std::size_t j = 0; j < cartan_coords.size(); ++j) {
    if (cartan_coords[j].is_zero()) continue;
    s += cartan_coords[j] * CScalar(Scalar(alpha_h_[alpha][j]));
  }
  return s;
}

AlgebraVector WeylBasis::bracket(const AlgebraVector& v, const AlgebraVector& w) const {
  const int rank = rs_->rank();
  AlgebraVector out;
  // [h, x_beta] and [x_alpha, h']
  if (v.has_cartan_part()) {
    for (const auto& [b, cb] : w.root_terms()) {
      out.add_root(b, alpha_on(b, v.cartan()) * cb);
    }
  }
  if (w.has_cartan_part()) {
    for (const auto& [a, ca] : v.root_terms()) {
      out.add_root(a, -(alpha_on(a, w.cartan()) * ca));
    }
  }
  // [x_alpha, x_beta]
  const int nr = rs_->num_roots();
  for (const auto& [a, ca] : v.root_terms()) {
    for (const auto& [b, cb] : w.root_terms()) {
      if (b == rs_->negate(a)) {
        const CScalar c = ca * cb;
        const auto& coords = rs_->root(a).coords;
        for (int j = 0; j < rank; ++j) {
          if (coords[j] != 0) out.add_cartan(j, c * CScalar(Scalar(Rational(coords[j]))), rank);
        }
        continue;
      }
      const RootId sum = rs_->sum_root(a, b);
      if (sum == kNoRoot) continue;
      out.add_root(sum, ca * cb * CScalar(n_[a * nr + b]));
    }
  }
  return out;
}

CScalar WeylBasis::killing(const AlgebraVector& v, const AlgebraVector& w) const {
  CScalar s;
  if (v.has_cartan_part() && w.has_cartan_part()) {
    const int rank = rs_->rank();
    for (int i = 0; i < rank; ++i) {
      if (v.cartan()[i].is_zero()) continue;
      for (int j = 0; j < rank; ++j) {
        if (w.cartan()[j].is_zero()) continue;
        s += v.cartan()[i] * w.cartan()[j] * CScalar(Scalar(killing_h_[i][j]));
      }
    }
  }
  for (const auto& [a, ca] : v.root_terms()) {
    const CScalar cb = w.root_coeff(rs_->negate(a));
    if (!cb.is_zero()) s += ca * cb;
  }
  return s;
}

}  // namespace flagah
