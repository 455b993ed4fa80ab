#include "flagah/classify.hpp"

#include <mutex>
#include <stdexcept>

namespace flagah {

bool operator==(const ClassReport& a, const ClassReport& b) {
  if (a.flags != b.flags) return false;
  if (a.witnesses.size() != b.witnesses.size()) return false;
  for (const auto& [k, w] : a.witnesses) {
    const auto it = b.witnesses.find(k);
    if (it == b.witnesses.end()) return false;
    if (it->second.tuple != w.tuple || it->second.value != w.value) return false;
  }
  return true;
}

namespace {

struct BasisContext {
  const AHStructure* s;
  const Geometry* geo;
  std::vector<AlgebraVector> basis;
  std::vector<std::string> labels;
};

BasisContext make_context(const AHStructure& s, const Geometry& geo) {
  BasisContext ctx;
  ctx.s = &s;
  ctx.geo = &geo;
  ctx.basis = s.flag().real_basis();
  for (int k = 0; k < static_cast<int>(ctx.basis.size()); ++k) {
    ctx.labels.push_back(s.flag().real_basis_label(k));
  }
  return ctx;
}

// condition values on one basis tuple; empty optional = condition holds there
std::optional<std::string> eval_k(const BasisContext& c, long i, long j) {
  const AlgebraVector v = c.geo->nabla_j(c.basis[i], c.basis[j]);
  if (v.is_zero()) return std::nullopt;
  return vector_str(c.s->rs(), v);
}

std::optional<std::string> eval_nk(const BasisContext& c, long i, long j) {
  AlgebraVector v = c.geo->nabla_j(c.basis[i], c.basis[j]);
  v.axpy(CScalar(1), c.geo->nabla_j(c.basis[j], c.basis[i]));
  if (v.is_zero()) return std::nullopt;
  return vector_str(c.s->rs(), v);
}

std::optional<std::string> eval_qk(const BasisContext& c, long i, long j) {
  AlgebraVector v = c.geo->nabla_j(c.basis[i], c.basis[j]);
  const AlgebraVector jx = c.s->apply_j(c.basis[i]);
  const AlgebraVector jy = c.s->apply_j(c.basis[j]);
  v.axpy(CScalar(1), c.geo->nabla_j(jx, jy));
  if (v.is_zero()) return std::nullopt;
  return vector_str(c.s->rs(), v);
}

std::optional<std::string> eval_h(const BasisContext& c, long i, long j) {
  const AlgebraVector v = c.geo->nijenhuis(c.basis[i], c.basis[j]);
  if (v.is_zero()) return std::nullopt;
  return vector_str(c.s->rs(), v);
}

std::optional<std::string> eval_ak(const BasisContext& c, long i, long j, long k) {
  const CScalar v = c.geo->d_omega(c.basis[i], c.basis[j], c.basis[k]);
  if (v.is_zero()) return std::nullopt;
  return v.str();
}

std::optional<std::string> eval_ask(const BasisContext& c, long i) {
  const CScalar v = c.geo->codifferential(c.basis[i]);
  if (v.is_zero()) return std::nullopt;
  return v.str();
}

void set_flag(ClassReport& rep, const std::string& name,
              const std::optional<std::pair<std::vector<std::string>, std::string>>& fail) {
  rep.flags[name] = !fail.has_value();
  if (fail) rep.witnesses[name] = Witness{fail->first, fail->second};
}

void derive_sk(ClassReport& rep) {
  rep.flags["SK"] = rep.flags["ASK"] && rep.flags["H"];
  if (!rep.flags["SK"]) {
    rep.witnesses["SK"] = rep.flags["ASK"] ? rep.witnesses["H"] : rep.witnesses["ASK"];
  }
}

}  // namespace

ClassReport classify(const AHStructure& s, Exec exec) {
  const Geometry geo(s);
  const BasisContext ctx = make_context(s, geo);
  const long nb = static_cast<long>(ctx.basis.size());
  ClassReport rep;

  auto pair_scan = [&](auto eval) -> std::optional<std::pair<std::vector<std::string>, std::string>> {
    auto hit = scan_first_fail<std::string>(nb * nb, exec, [&](long idx) {
      return eval(ctx, idx / nb, idx % nb);
    });
    if (!hit) return std::nullopt;
    const long i = hit->first / nb, j = hit->first % nb;
    return std::make_pair(std::vector<std::string>{ctx.labels[i], ctx.labels[j]}, hit->second);
  };

  set_flag(rep, "K", pair_scan(eval_k));
  set_flag(rep, "NK", pair_scan(eval_nk));
  set_flag(rep, "QK", pair_scan(eval_qk));
  set_flag(rep, "H", pair_scan(eval_h));

  auto ak_hit = scan_first_fail<std::string>(nb * nb * nb, exec, [&](long idx) {
    return eval_ak(ctx, idx / (nb * nb), (idx / nb) % nb, idx % nb);
  });
  std::optional<std::pair<std::vector<std::string>, std::string>> ak_fail;
  if (ak_hit) {
    const long i = ak_hit->first / (nb * nb), j = (ak_hit->first / nb) % nb, k = ak_hit->first % nb;
    ak_fail = std::make_pair(std::vector<std::string>{ctx.labels[i], ctx.labels[j], ctx.labels[k]},
                             ak_hit->second);
  }
  set_flag(rep, "AK", ak_fail);

  auto ask_hit = scan_first_fail<std::string>(nb, exec, [&](long i) { return eval_ask(ctx, i); });
  std::optional<std::pair<std::vector<std::string>, std::string>> ask_fail;
  if (ask_hit) {
    ask_fail = std::make_pair(std::vector<std::string>{ctx.labels[ask_hit->first]}, ask_hit->second);
  }
  set_flag(rep, "ASK", ask_fail);

  derive_sk(rep);
  check_inclusion_lattice(rep);
  return rep;
}

ClassReport classify_serial(const AHStructure& s) {
  // reference implementation: plain nested loops, first failure wins
  const Geometry geo(s);
  const BasisContext ctx = make_context(s, geo);
  const long nb = static_cast<long>(ctx.basis.size());
  ClassReport rep;
  for (const auto& name : class_names()) rep.flags[name] = true;

  auto record = [&](const std::string& name, std::vector<std::string> tuple, std::string value) {
    if (!rep.flags[name]) return;
    rep.flags[name] = false;
    rep.witnesses[name] = Witness{std::move(tuple), std::move(value)};
  };

  for (long i = 0; i < nb; ++i) {
    for (long j = 0; j < nb; ++j) {
      if (rep.flags["K"]) {
        if (auto v = eval_k(ctx, i, j)) record("K", {ctx.labels[i], ctx.labels[j]}, *v);
      }
      if (rep.flags["NK"]) {
        if (auto v = eval_nk(ctx, i, j)) record("NK", {ctx.labels[i], ctx.labels[j]}, *v);
      }
      if (rep.flags["QK"]) {
        if (auto v = eval_qk(ctx, i, j)) record("QK", {ctx.labels[i], ctx.labels[j]}, *v);
      }
      if (rep.flags["H"]) {
        if (auto v = eval_h(ctx, i, j)) record("H", {ctx.labels[i], ctx.labels[j]}, *v);
      }
    }
  }
  for (long i = 0; i < nb && rep.flags["AK"]; ++i) {
    for (long j = 0; j < nb && rep.flags["AK"]; ++j) {
      for (long k = 0; k < nb && rep.flags["AK"]; ++k) {
        if (auto v = eval_ak(ctx, i, j, k)) {
          record("AK", {ctx.labels[i], ctx.labels[j], ctx.labels[k]}, *v);
        }
      }
    }
  }
  for (long i = 0; i < nb && rep.flags["ASK"]; ++i) {
    if (auto v = eval_ask(ctx, i)) record("ASK", {ctx.labels[i]}, *v);
  }
  derive_sk(rep);
  check_inclusion_lattice(rep);
  return rep;
}

void check_inclusion_lattice(const ClassReport& r) {
  auto implies = [&](const char* a, const char* b) {
    if (r.at(a) && !r.at(b)) {
      throw std::logic_error(std::string("class inclusion violated: ") + a + " => " + b);
    }
  };
  implies("K", "AK");
  implies("K", "NK");
  implies("K", "QK");
  implies("K", "H");
  implies("K", "SK");
  implies("K", "ASK");
  implies("AK", "QK");
  implies("NK", "QK");
  implies("QK", "ASK");
  if (r.at("SK") != (r.at("ASK") && r.at("H"))) {
    throw std::logic_error("class inclusion violated: SK <=> ASK and H");
  }
}

InvariantMetric random_metric(const FlagManifold& f, std::uint64_t seed) {
  DetRng rng(seed);
  InvariantMetric g;
  for (int c = 0; c < f.num_summands(); ++c) g.lambda.push_back(rng.positive_rational(20));
  return g;
}

namespace {

std::vector<int> mask_to_theta(int mask, int rank) {
  std::vector<int> theta;
  for (int j = 0; j < rank; ++j) {
    if (mask & (1 << j)) theta.push_back(j);
  }
  return theta;
}

IACS mask_to_iacs(int mask, int classes) {
  IACS j;
  for (int c = 0; c < classes; ++c) j.epsilon.push_back((mask >> c) & 1 ? -1 : 1);
  return j;
}

}  // namespace

AskRankSummary sweep_ask_rank(Family family, int rank, int samples, std::uint64_t seed,
                              Exec exec, std::optional<AskViolation>& violation) {
  AskRankSummary summary;
  summary.rank = rank;
  const auto rs = RootSystem::build(family, rank);
  const auto wb = WeylBasis::build(rs);
  const int full = (1 << rank) - 1;

  for (int theta_mask = 0; theta_mask <= full; ++theta_mask) {
    ++summary.theta_subsets;
    if (theta_mask == full) {
      // Theta = Sigma gives R_Theta empty (a point); nothing to check
      ++summary.theta_skipped;
      continue;
    }
    const FlagManifold flag = FlagManifold::build(wb, mask_to_theta(theta_mask, rank));
    const int classes = flag.num_summands();
    const long configs = (1L << classes) * samples;

    std::mutex mu;
    std::optional<std::pair<long, AskViolation>> local;

    parallel_for(configs, exec, [&](long cfg) {
      const int eps_mask = static_cast<int>(cfg / samples);
      const int sample = static_cast<int>(cfg % samples);
      const std::uint64_t child =
          mix_seed(seed, (static_cast<std::uint64_t>(rank) << 40) ^
                             (static_cast<std::uint64_t>(theta_mask) << 24) ^
                             (static_cast<std::uint64_t>(eps_mask) << 8) ^
                             static_cast<std::uint64_t>(sample));
      const IACS iacs = mask_to_iacs(eps_mask, classes);
      const InvariantMetric metric = random_metric(flag, child);
      const AHStructure s = AHStructure::build(flag, metric, iacs);
      const Geometry geo(s);
      const auto basis = s.flag().real_basis();
      const int pairs = static_cast<int>(s.j_frame().size());

      auto report = [&](const std::string& input, const std::string& value) {
        AskViolation v;
        v.rank = rank;
        v.theta = mask_to_theta(theta_mask, rank);
        v.epsilon = iacs.epsilon;
        for (const auto& l : metric.lambda) v.lambda.push_back(rational_str(l));
        v.input = input;
        v.value = value;
        std::lock_guard<std::mutex> lock(mu);
        if (!local || cfg < local->first) local = {cfg, std::move(v)};
      };

      for (int b = 0; b < static_cast<int>(basis.size()); ++b) {
        CScalar total;
        for (int p = 0; p < pairs; ++p) {
          for (int jpart = 0; jpart < 2; ++jpart) {
            const CScalar term = geo.codifferential_term(p, jpart != 0, basis[b]);
            if (!term.is_zero()) {
              report("(nabla_" + s.frame_label(p, jpart != 0) + " Omega)(" +
                         s.frame_label(p, jpart != 0) + ", " + s.flag().real_basis_label(b) + ")",
                     term.str());
              return;
            }
            total += term;
          }
        }
        if (!total.is_zero()) {
          report("delta Omega(" + s.flag().real_basis_label(b) + ")", total.str());
          return;
        }
      }
    });

    summary.configurations += configs;
    summary.term_checks +=
        configs * static_cast<long>(flag.m_positive().size()) * 2 * flag.dim_real();
    if (local) {
      violation = local->second;
      return summary;
    }
  }
  return summary;
}

AskCertificate verify_ask_universal(Family family, int max_rank, int samples, std::uint64_t seed,
                                    Exec exec) {
  AskCertificate cert;
  cert.family = family_str(family);
  cert.max_rank = max_rank;
  cert.samples = samples;
  cert.seed = seed;
  const int min_rank = family == Family::A ? 1 : family == Family::D ? 3 : 2;
  if (max_rank < min_rank) {
    throw std::invalid_argument("max-rank below the minimum rank of family " + cert.family);
  }
  std::optional<AskViolation> violation;
  for (int rank = min_rank; rank <= max_rank; ++rank) {
    cert.ranks.push_back(sweep_ask_rank(family, rank, samples, seed, exec, violation));
    if (violation) break;
  }
  cert.violation = violation;
  cert.pass = !violation.has_value();
  return cert;
}

}  // namespace flagah
