#include "flagah/submanifold.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagah {

namespace {

// compact-form conjugation on coordinates: tau(X_gamma) = -X_{-gamma},
// tau(H) = -H, extended antilinearly; fixed points = u
AlgebraVector compact_conj(const RootSystem& rs, const AlgebraVector& v) {
  AlgebraVector out;
  for (std::size_t j = 0; j < v.cartan().size(); ++j) {
    const CScalar& c = v.cartan()[j];
    if (!c.is_zero()) out.add_cartan(static_cast<int>(j), -(c.conj()), rs.rank());
  }
  for (const auto& [id, c] : v.root_terms()) {
    out.add_root(rs.negate(id), -(c.conj()));
  }
  return out;
}

bool is_in_compact_form(const RootSystem& rs, const AlgebraVector& v) {
  return compact_conj(rs, v) == v;
}

}  // namespace

int Submanifold::codimension() const {
  // dim m - dim n = |R_Theta| - |R' ∩ R_Theta| for sub-flags
  return static_cast<int>(s_->flag().r_complement().size()) - dim_real();
}

void Submanifold::finish_common() {
  const FlagManifold& f = s_->flag();
  const RootSystem& rs = s_->rs();
  finish_common_coords_only();

  std::vector<char> in_rn(rs.num_positive(), 0);
  for (RootId id : r_n_) in_rn[id] = 1;
  n_perp_frame_.clear();
  for (int p = 0; p < static_cast<int>(f.m_positive().size()); ++p) {
    if (!in_rn[f.m_positive()[p]]) n_perp_frame_.push_back(s_->j_frame()[p]);
  }
}

Submanifold Submanifold::build_subflag(AHStructure s_in, std::vector<int> theta_prime) {
  auto shared = std::make_shared<const AHStructure>(std::move(s_in));
  Submanifold d(shared);
  d.kind_ = SubKind::subflag;
  const FlagManifold& f = shared->flag();
  const RootSystem& rs = shared->rs();
  const int rank = rs.rank();

  std::sort(theta_prime.begin(), theta_prime.end());
  if (theta_prime.empty()) throw std::invalid_argument("theta_prime must be nonempty");
  for (std::size_t k = 0; k < theta_prime.size(); ++k) {
    if (theta_prime[k] < 0 || theta_prime[k] >= rank) {
      throw std::invalid_argument("theta_prime index out of range");
    }
    if (k > 0 && theta_prime[k] == theta_prime[k - 1]) {
      throw std::invalid_argument("duplicate theta_prime index");
    }
  }
  std::vector<char> in_tp(rank, 0);
  for (int t : theta_prime) in_tp[t] = 1;
  bool subset_of_theta = true;
  {
    std::vector<char> in_t(rank, 0);
    for (int t : f.theta()) in_t[t] = 1;
    for (int t : theta_prime) {
      if (!in_t[t]) subset_of_theta = false;
    }
  }
  if (subset_of_theta) {
    throw std::invalid_argument(
        "theta_prime is contained in theta: no complementary tangent directions");
  }
  d.theta_prime_ = theta_prime;

  // R' = span(Theta') ∩ R; tangent roots are R'+ \ R(Theta)+
  for (RootId id = 0; id < rs.num_roots(); ++id) {
    bool inside = true;
    for (int j = 0; j < rank; ++j) {
      if (rs.root(id).coords[j] != 0 && !in_tp[j]) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    d.r_prime_.push_back(id);
    if (rs.is_positive(id) && !f.in_r_theta(id)) d.tangent_pos_.push_back(id);
  }
  d.r_n_ = d.tangent_pos_;

  // the ambient frame subset is a basis of n here
  std::vector<int> pair_of_root(rs.num_positive(), -1);
  for (int p = 0; p < static_cast<int>(f.m_positive().size()); ++p) {
    pair_of_root[f.m_positive()[p]] = p;
  }
  for (RootId id : d.tangent_pos_) d.n_frame_.push_back(shared->j_frame()[pair_of_root[id]]);

  d.finish_common();
  d.n_span_ = SpanBasis(static_cast<int>(d.root_of_coord_.size()));
  for (RootId id : d.tangent_pos_) {
    for (RootId signed_id : {id, rs.negate(id)}) {
      std::vector<CScalar> v(d.root_of_coord_.size());
      v[d.coord_of_root_[signed_id]] = CScalar(1);
      d.n_span_.insert(std::move(v));
    }
  }
  return d;
}

Submanifold Submanifold::build_from_subalgebra(AHStructure s_in,
                                               const std::vector<AlgebraVector>& generators) {
  auto shared = std::make_shared<const AHStructure>(std::move(s_in));
  Submanifold d(shared);
  d.kind_ = SubKind::subalgebra;
  const FlagManifold& f = shared->flag();
  const RootSystem& rs = shared->rs();
  const WeylBasis& wb = shared->wb();
  const int rank = rs.rank();
  if (generators.empty()) throw std::invalid_argument("empty generator list");

  // full-algebra dense coordinates, m-block first so that echelon rows with a
  // pivot beyond the m-block have no m-part at all
  std::vector<RootId> order;
  for (RootId id : f.r_complement()) order.push_back(id);
  for (RootId id : f.r_theta()) order.push_back(id);
  const int m_block = static_cast<int>(f.r_complement().size());
  const int dim = rs.num_roots() + rank;
  std::vector<int> pos_of_root(rs.num_roots());
  for (int k = 0; k < static_cast<int>(order.size()); ++k) pos_of_root[order[k]] = k;

  auto flatten = [&](const AlgebraVector& v) {
    std::vector<CScalar> out(dim);
    for (const auto& [id, c] : v.root_terms()) out[pos_of_root[id]] = c;
    for (std::size_t j = 0; j < v.cartan().size(); ++j) {
      out[rs.num_roots() + j] = v.cartan()[j];
    }
    return out;
  };
  auto unflatten = [&](const std::vector<CScalar>& x) {
    AlgebraVector v;
    for (int k = 0; k < rs.num_roots(); ++k) {
      if (!x[k].is_zero()) v.add_root(order[k], x[k]);
    }
    for (int j = 0; j < rank; ++j) {
      if (!x[rs.num_roots() + j].is_zero()) v.add_cartan(j, x[rs.num_roots() + j], rank);
    }
    return v;
  };

  // close the generators under bracket
  SpanBasis l_span(dim);
  std::vector<AlgebraVector> l_vecs;
  for (const auto& g : generators) {
    if (!is_in_compact_form(rs, g)) {
      throw std::invalid_argument("generator is not in the compact real form u: " +
                                  vector_str(rs, g));
    }
    if (l_span.insert(flatten(g))) l_vecs.push_back(g);
  }
  for (std::size_t a = 0; a < l_vecs.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const AlgebraVector br = wb.bracket(l_vecs[a], l_vecs[b]);
      if (br.is_zero()) continue;
      if (l_span.insert(flatten(br))) l_vecs.push_back(br);
      if (l_vecs.size() > static_cast<std::size_t>(dim)) {
        throw std::logic_error("bracket closure exceeded the algebra dimension");
      }
    }
  }

  // rows with pivot past the m-block span (l ∩ k_Theta)^C
  std::vector<std::vector<CScalar>> k_rows;
  for (int r = 0; r < l_span.rank(); ++r) {
    if (l_span.pivots()[r] >= m_block) k_rows.push_back(l_span.rows()[r]);
  }

  // n^C = { v in l^C : B(v, w) = 0 for all w in (l ∩ k)^C }
  const auto& rows = l_span.rows();
  std::vector<std::vector<CScalar>> constraint(k_rows.size(),
                                               std::vector<CScalar>(rows.size()));
  for (std::size_t k = 0; k < k_rows.size(); ++k) {
    const AlgebraVector wk = unflatten(k_rows[k]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      constraint[k][i] = wb.killing(unflatten(rows[i]), wk);
    }
  }
  std::vector<std::vector<CScalar>> coeffs =
      k_rows.empty() ? [&] {
        std::vector<std::vector<CScalar>> all;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          std::vector<CScalar> e(rows.size());
          e[i] = CScalar(1);
          all.push_back(std::move(e));
        }
        return all;
      }()
                     : kernel_basis(constraint, static_cast<int>(rows.size()));

  std::vector<AlgebraVector> n_complex;
  for (const auto& c : coeffs) {
    AlgebraVector v;
    for (std::size_t i = 0; i < rows.size(); ++i) v.axpy(c[i], unflatten(rows[i]));
    if (v.is_zero()) continue;
    n_complex.push_back(std::move(v));
  }
  if (n_complex.empty()) {
    throw std::invalid_argument("tangent space n is zero: l is contained in k_Theta");
  }

  // n must land inside m for the structure to restrict
  for (const auto& v : n_complex) {
    if (v.has_cartan_part()) {
      throw std::domain_error("n is not contained in m (Cartan component present)");
    }
    for (const auto& [id, c] : v.root_terms()) {
      if (f.in_r_theta(id)) {
        throw std::domain_error("n is not contained in m (support on R(Theta) root " +
                                rs.label(id) + ")");
      }
    }
  }

  // real basis of n: realify the tau-stable complex span
  d.finish_common_coords_only();
  SpanBasis nspan(static_cast<int>(d.root_of_coord_.size()));
  auto flatten_m = [&](const AlgebraVector& v) {
    std::vector<CScalar> out(d.root_of_coord_.size());
    for (const auto& [id, c] : v.root_terms()) out[d.coord_of_root_[id]] = c;
    return out;
  };
  std::vector<AlgebraVector> real_basis;
  const CScalar half(Scalar(Rational(1, 2)));
  const CScalar inv_2i = CScalar(Scalar(), Scalar(Rational(-1, 2)));  // 1/(2i) = -i/2
  for (const auto& v : n_complex) {
    const AlgebraVector tv = compact_conj(rs, v);
    AlgebraVector re = half * (v + tv);
    AlgebraVector im = inv_2i * (v - tv);
    for (AlgebraVector* w : {&re, &im}) {
      if (w->is_zero()) continue;
      if (nspan.insert(flatten_m(*w))) real_basis.push_back(*w);
    }
  }
  if (static_cast<int>(real_basis.size()) != static_cast<int>(n_complex.size())) {
    throw std::logic_error("realification lost dimensions of n");
  }

  // J-invariance: J(n) = n, otherwise the submanifold is not holomorphic
  for (const auto& w : real_basis) {
    if (!nspan.contains(flatten_m(shared->apply_j(w)))) {
      throw std::domain_error("J(n) != n: the subalgebra orbit is not a holomorphic submanifold");
    }
  }

  // R_n: complementary positive roots seen by n
  std::vector<char> seen(rs.num_positive(), 0);
  for (const auto& w : real_basis) {
    for (const auto& [id, c] : w.root_terms()) seen[rs.abs(id)] = 1;
  }
  for (RootId id : f.m_positive()) {
    if (seen[id]) d.r_n_.push_back(id);
  }
  if (d.r_n_.size() == f.m_positive().size() &&
      real_basis.size() == f.r_complement().size()) {
    throw std::invalid_argument("codimension 0: l covers the whole tangent space");
  }
  if (d.r_n_.size() == f.m_positive().size()) {
    throw std::domain_error("R_Theta - R_n is empty: no invariant normal J-frame exists");
  }

  // adapted J-frame by pair-orthonormalization inside n
  std::vector<AlgebraVector> placed;
  for (AlgebraVector x : real_basis) {
    for (const auto& e : placed) {
      x.axpy(-shared->metric_eval(x, e), e);
    }
    if (x.is_zero()) continue;
    const CScalar norm = shared->metric_eval(x, x);
    if (!norm.is_real() || !norm.re().is_rational()) {
      throw std::domain_error(
          "orthonormalization norm is not rational, cannot stay exact: " + norm.str());
    }
    const Rational q = norm.re().as_rational();
    if (q <= 0) throw std::logic_error("nonpositive norm on a real tangent vector");
    const CScalar inv(Scalar::sqrt_rational(Rational(1) / q));
    AlgebraVector e = inv * x;
    AlgebraVector je = shared->apply_j(e);
    placed.push_back(e);
    placed.push_back(je);
    d.n_frame_.push_back({std::move(e), std::move(je)});
  }
  if (2 * d.n_frame_.size() != real_basis.size()) {
    throw std::logic_error("adapted frame does not span n");
  }

  d.n_span_ = std::move(nspan);
  d.tangent_pos_.clear();
  d.finish_common();
  return d;
}

void Submanifold::finish_common_coords_only() {
  const FlagManifold& f = s_->flag();
  const RootSystem& rs = s_->rs();
  coord_of_root_.assign(rs.num_roots(), -1);
  root_of_coord_.clear();
  for (RootId id : f.r_complement()) {
    coord_of_root_[id] = static_cast<int>(root_of_coord_.size());
    root_of_coord_.push_back(id);
  }
}

bool Submanifold::in_n(const AlgebraVector& v) const {
  if (v.has_cartan_part()) return false;
  std::vector<CScalar> x(root_of_coord_.size());
  for (const auto& [id, c] : v.root_terms()) {
    if (coord_of_root_[id] < 0) return false;
    x[coord_of_root_[id]] = c;
  }
  return n_span_.contains(std::move(x));
}

AlgebraVector Submanifold::project_n(const AlgebraVector& v) const {
  const AlgebraVector vm = geo_.m_project(v);
  AlgebraVector out;
  for (const auto& pair : n_frame_) {
    out.axpy(s_->metric_eval(vm, pair.v), pair.v);
    out.axpy(s_->metric_eval(vm, pair.jv), pair.jv);
  }
  return out;
}

AlgebraVector Submanifold::project_n_perp(const AlgebraVector& v) const {
  return geo_.m_project(v) - project_n(v);
}

AlgebraVector Submanifold::n_project_bracket(const AlgebraVector& x,
                                             const AlgebraVector& y) const {
  return project_n(s_->wb().bracket(x, y));
}

AlgebraVector Submanifold::u_prime(const AlgebraVector& x, const AlgebraVector& y) const {
  // 2 g(U'(x,y), z) = g([z,x]_n, y) + g(x, [z,y]_n) solved over the adapted frame
  AlgebraVector u;
  const CScalar half(Scalar(Rational(1, 2)));
  for (const auto& pair : n_frame_) {
    for (const AlgebraVector* fv : {&pair.v, &pair.jv}) {
      const CScalar coeff = half * (s_->metric_eval(n_project_bracket(*fv, x), y) +
                                    s_->metric_eval(x, n_project_bracket(*fv, y)));
      u.axpy(coeff, *fv);
    }
  }
  return u;
}

AlgebraVector Submanifold::nabla_prime(const AlgebraVector& x, const AlgebraVector& y) const {
  const CScalar mhalf(Scalar(Rational(-1, 2)));
  AlgebraVector out = mhalf * n_project_bracket(x, y);
  out.axpy(CScalar(1), u_prime(x, y));
  return out;
}

AlgebraVector Submanifold::nomizu_prime(const AlgebraVector& x, const AlgebraVector& y) const {
  const CScalar half(Scalar(Rational(1, 2)));
  AlgebraVector out = half * n_project_bracket(x, y);
  out.axpy(CScalar(1), u_prime(x, y));
  return out;
}

AlgebraVector Submanifold::nabla_j_prime(const AlgebraVector& x, const AlgebraVector& z) const {
  return nomizu_prime(x, s_->apply_j(z)) - s_->apply_j(nomizu_prime(x, z));
}

CScalar Submanifold::cov_deriv_omega_prime(const AlgebraVector& x, const AlgebraVector& y,
                                           const AlgebraVector& z) const {
  return s_->metric_eval(y, nabla_j_prime(x, z));
}

AlgebraVector Submanifold::second_fundamental_form(const AlgebraVector& x,
                                                   const AlgebraVector& y) const {
  if (!in_n(x) || !in_n(y)) {
    throw std::domain_error("second_fundamental_form: inputs must lie in n");
  }
  const CScalar mhalf(Scalar(Rational(-1, 2)));
  AlgebraVector ambient = mhalf * geo_.m_project(s_->wb().bracket(x, y));
  ambient.axpy(CScalar(1), geo_.u_vec(x, y));
  return ambient - nabla_prime(x, y);
}

AlgebraVector Submanifold::mean_curvature() const {
  AlgebraVector h;
  for (const auto& pair : n_frame_) {
    h.axpy(CScalar(1), second_fundamental_form(pair.v, pair.v));
    h.axpy(CScalar(1), second_fundamental_form(pair.jv, pair.jv));
  }
  const long r = static_cast<long>(n_frame_.size());
  return CScalar(Scalar(Rational(1, 2 * r))) * h;
}

CScalar Submanifold::partial_codifferential(const AlgebraVector& x) const {
  CScalar s;
  for (const auto& pair : n_frame_) {
    s += geo_.cov_deriv_omega(pair.v, pair.v, x);
    s += geo_.cov_deriv_omega(pair.jv, pair.jv, x);
  }
  return s;
}

CScalar Submanifold::normal_codifferential(const AlgebraVector& x) const {
  CScalar s;
  for (const auto& pair : n_perp_frame_) {
    s += geo_.cov_deriv_omega(pair.v, pair.v, x);
    s += geo_.cov_deriv_omega(pair.jv, pair.jv, x);
  }
  return s;
}

CScalar Submanifold::intrinsic_codifferential(const AlgebraVector& x) const {
  if (!in_n(x)) throw std::domain_error("intrinsic_codifferential: input must lie in n");
  CScalar s;
  for (const auto& pair : n_frame_) {
    s += cov_deriv_omega_prime(pair.v, pair.v, x);
    s += cov_deriv_omega_prime(pair.jv, pair.jv, x);
  }
  return s;
}

ClassReport Submanifold::classify_intrinsic(Exec exec) const {
  // same scans as the ambient classifier, over the adapted tangent frame and
  // with the intrinsic operators
  std::vector<AlgebraVector> basis;
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n_frame_.size(); ++p) {
    basis.push_back(n_frame_[p].v);
    labels.push_back("E" + std::to_string(p + 1));
    basis.push_back(n_frame_[p].jv);
    labels.push_back("JE" + std::to_string(p + 1));
  }
  const long nb = static_cast<long>(basis.size());
  ClassReport rep;

  auto nj = [&](long i, long j) { return nabla_j_prime(basis[i], basis[j]); };
  auto vector_witness = [&](const AlgebraVector& v) { return vector_str(s_->rs(), v); };

  auto pair_scan = [&](auto eval, const std::string& name) {
    auto hit = scan_first_fail<std::string>(nb * nb, exec, [&](long idx) {
      return eval(idx / nb, idx % nb);
    });
    rep.flags[name] = !hit.has_value();
    if (hit) {
      rep.witnesses[name] =
          Witness{{labels[hit->first / nb], labels[hit->first % nb]}, hit->second};
    }
  };

  pair_scan([&](long i, long j) -> std::optional<std::string> {
    const AlgebraVector v = nj(i, j);
    if (v.is_zero()) return std::nullopt;
    return vector_witness(v);
  }, "K");
  pair_scan([&](long i, long j) -> std::optional<std::string> {
    AlgebraVector v = nj(i, j);
    v.axpy(CScalar(1), nj(j, i));
    if (v.is_zero()) return std::nullopt;
    return vector_witness(v);
  }, "NK");
  pair_scan([&](long i, long j) -> std::optional<std::string> {
    AlgebraVector v = nj(i, j);
    v.axpy(CScalar(1), nabla_j_prime(s_->apply_j(basis[i]), s_->apply_j(basis[j])));
    if (v.is_zero()) return std::nullopt;
    return vector_witness(v);
  }, "QK");
  pair_scan([&](long i, long j) -> std::optional<std::string> {
    // Nijenhuis of the induced structure: brackets projected to n
    const AlgebraVector jx = s_->apply_j(basis[i]);
    const AlgebraVector jy = s_->apply_j(basis[j]);
    AlgebraVector v = n_project_bracket(jx, jy);
    v.axpy(CScalar(-1), s_->apply_j(n_project_bracket(jx, basis[j])));
    v.axpy(CScalar(-1), s_->apply_j(n_project_bracket(basis[i], jy)));
    v.axpy(CScalar(-1), n_project_bracket(basis[i], basis[j]));
    if (v.is_zero()) return std::nullopt;
    return vector_witness(CScalar(2) * v);
  }, "H");

  auto ak_hit = scan_first_fail<std::string>(nb * nb * nb, exec, [&](long idx) -> std::optional<std::string> {
    const long i = idx / (nb * nb), j = (idx / nb) % nb, k = idx % nb;
    CScalar v = cov_deriv_omega_prime(basis[i], basis[j], basis[k]) +
                cov_deriv_omega_prime(basis[j], basis[k], basis[i]) +
                cov_deriv_omega_prime(basis[k], basis[i], basis[j]);
    if (v.is_zero()) return std::nullopt;
    return (v * CScalar(Scalar(Rational(1, 3)))).str();
  });
  rep.flags["AK"] = !ak_hit.has_value();
  if (ak_hit) {
    const long i = ak_hit->first / (nb * nb), j = (ak_hit->first / nb) % nb, k = ak_hit->first % nb;
    rep.witnesses["AK"] = Witness{{labels[i], labels[j], labels[k]}, ak_hit->second};
  }

  auto ask_hit = scan_first_fail<std::string>(nb, exec, [&](long i) -> std::optional<std::string> {
    const CScalar v = intrinsic_codifferential(basis[i]);
    if (v.is_zero()) return std::nullopt;
    return v.str();
  });
  rep.flags["ASK"] = !ask_hit.has_value();
  if (ask_hit) rep.witnesses["ASK"] = Witness{{labels[ask_hit->first]}, ask_hit->second};

  rep.flags["SK"] = rep.flags["ASK"] && rep.flags["H"];
  if (!rep.flags["SK"]) {
    rep.witnesses["SK"] = rep.flags["ASK"] ? rep.witnesses["H"] : rep.witnesses["ASK"];
  }
  check_inclusion_lattice(rep);
  return rep;
}

SubCertificate Submanifold::certify(const CertifyOptions& opts) const {
  SubCertificate cert;
  const RootSystem& rs = s_->rs();

  auto fail = [&cert](bool& flag, const std::string& key, const std::string& where,
                      const std::string& value) {
    if (!flag) return;
    flag = false;
    cert.failures[key] = SubWitness{where, value};
  };

  // holomorphic: J maps the adapted frame back into n
  for (const auto& pair : n_frame_) {
    if (!in_n(s_->apply_j(pair.v)) || !in_n(s_->apply_j(pair.jv))) {
      fail(cert.holomorphic, "holomorphic", "J(frame)", "outside n");
    }
  }

  // totally geodesic: alpha == 0 on all ordered tangent frame pairs
  std::vector<const AlgebraVector*> tangent;
  for (const auto& pair : n_frame_) {
    tangent.push_back(&pair.v);
    tangent.push_back(&pair.jv);
  }
  const long nt = static_cast<long>(tangent.size());
  auto tg_hit = scan_first_fail<std::string>(nt * nt, opts.exec, [&](long idx) -> std::optional<std::string> {
    const AlgebraVector a = second_fundamental_form(*tangent[idx / nt], *tangent[idx % nt]);
    if (a.is_zero()) return std::nullopt;
    return vector_str(rs, a);
  });
  if (tg_hit) {
    fail(cert.totally_geodesic, "totally_geodesic",
         "alpha(E_" + std::to_string(tg_hit->first / nt) + ", E_" +
             std::to_string(tg_hit->first % nt) + ")",
         tg_hit->second);
  }

  // minimality: H == 0, and independently delta-bar Omega == 0 on the normal frame
  const AlgebraVector h = mean_curvature();
  if (!h.is_zero()) {
    fail(cert.mean_curvature_zero, "mean_curvature", "H", vector_str(rs, h));
  }
  const long r = static_cast<long>(n_frame_.size());
  const AlgebraVector jh = s_->apply_j(h);
  for (const auto& pair : n_perp_frame_) {
    for (const AlgebraVector* z : {&pair.v, &pair.jv}) {
      const CScalar lhs = partial_codifferential(*z);
      if (!lhs.is_zero()) {
        fail(cert.normal_partial_codiff_zero, "partial_codifferential", "delta-bar Omega(Z)",
             lhs.str());
      }
      const CScalar rhs = CScalar(Scalar(Rational(2 * r))) * s_->metric_eval(jh, *z);
      if (lhs != rhs) {
        fail(cert.minimal_identity, "minimal_identity",
             "delta-bar Omega(Z) vs 2r g(JH, Z)", lhs.str() + " vs " + rhs.str());
      }
    }
  }
  cert.minimal = cert.mean_curvature_zero && cert.normal_partial_codiff_zero;

  // normal codifferential vanishes termwise; split identity on tangent vectors
  if (opts.check_split_identity) {
    for (const auto& pair : n_frame_) {
      for (const AlgebraVector* x : {&pair.v, &pair.jv}) {
        const CScalar whole = geo_.codifferential(*x);
        const CScalar intr = intrinsic_codifferential(*x);
        const CScalar normal = normal_codifferential(*x);
        if (!normal.is_zero()) {
          fail(cert.normal_codiff_zero, "normal_codifferential", "delta-doublebar Omega(X)",
               normal.str());
        }
        if (whole != intr + normal) {
          fail(cert.split_identity, "split_identity",
               "delta Omega(X) vs delta' + delta-doublebar", whole.str());
        }
      }
    }
  }

  // sub-flags: bracket projection equality on tangent root pairs
  if (kind_ == SubKind::subflag) {
    for (RootId a : tangent_pos_) {
      for (RootId asgn : {a, rs.negate(a)}) {
        for (RootId b : tangent_pos_) {
          for (RootId bsgn : {b, rs.negate(b)}) {
            const AlgebraVector br =
                s_->wb().bracket(AlgebraVector::x(asgn), AlgebraVector::x(bsgn));
            const AlgebraVector bm = geo_.m_project(br);
            const AlgebraVector bn = project_n(br);
            if (!(bm == bn)) {
              fail(cert.comp_equal, "comp_equal",
                   "[X(" + rs.label(asgn) + "), X(" + rs.label(bsgn) + ")]",
                   vector_str(rs, bm - bn));
            }
          }
        }
      }
    }
  }

  if (opts.check_classes) {
    cert.classes_checked = true;
    cert.ambient_classes = classify(*s_, opts.exec);
    cert.intrinsic_classes = classify_intrinsic(opts.exec);
    for (const auto& name : class_names()) {
      cert.class_preserved[name] =
          !cert.ambient_classes.at(name) || cert.intrinsic_classes.at(name);
    }
  }

  if (kind_ == SubKind::subflag) {
    cert.required_outcomes_ok = cert.minimal && cert.totally_geodesic;
  }
  return cert;
}

}  // namespace flagah
