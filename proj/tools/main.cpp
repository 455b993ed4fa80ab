#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "flagah/report.hpp"
#include "flagah/verify.hpp"

using namespace flagah;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

std::vector<int> parse_indices(const std::string& spec) {
  std::vector<int> out;
  std::string token;
  std::stringstream ss(spec);
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    out.push_back(std::stoi(token) - 1);  // 1-based on the command line
  }
  return out;
}

std::vector<std::string> split(const std::string& spec) {
  std::vector<std::string> out;
  std::string token;
  std::stringstream ss(spec);
  while (std::getline(ss, token, ',')) out.push_back(token);
  return out;
}

InvariantMetric parse_lambda(const FlagManifold& f, const std::string& spec, std::uint64_t seed) {
  if (spec.empty() || spec == "random") return random_metric(f, seed);
  InvariantMetric g;
  for (const auto& tok : split(spec)) g.lambda.push_back(parse_rational(tok));
  if (static_cast<int>(g.lambda.size()) != f.num_summands()) {
    throw std::invalid_argument("--lambda needs " + std::to_string(f.num_summands()) +
                                " values (one per summand class), got " +
                                std::to_string(g.lambda.size()));
  }
  return g;
}

IACS parse_epsilon_one(const FlagManifold& f, const std::string& spec) {
  IACS j;
  if (spec.empty()) {
    j.epsilon.assign(f.num_summands(), 1);
    return j;
  }
  for (const auto& tok : split(spec)) {
    if (tok == "+" || tok == "+1" || tok == "1") {
      j.epsilon.push_back(1);
    } else if (tok == "-" || tok == "-1") {
      j.epsilon.push_back(-1);
    } else {
      throw std::invalid_argument("bad epsilon entry '" + tok + "' (use + or -)");
    }
  }
  if (static_cast<int>(j.epsilon.size()) != f.num_summands()) {
    throw std::invalid_argument("--epsilon needs " + std::to_string(f.num_summands()) +
                                " signs (one per summand class), got " +
                                std::to_string(j.epsilon.size()));
  }
  return j;
}

std::vector<IACS> parse_epsilon(const FlagManifold& f, const std::string& spec) {
  if (spec != "all") return {parse_epsilon_one(f, spec)};
  std::vector<IACS> all;
  for (int mask = 0; mask < (1 << f.num_summands()); ++mask) {
    IACS j;
    for (int c = 0; c < f.num_summands(); ++c) j.epsilon.push_back((mask >> c) & 1 ? -1 : 1);
    all.push_back(std::move(j));
  }
  return all;
}

void emit(const Json& j, bool json_mode) {
  if (json_mode) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_text(j);
  }
}

struct Options {
  std::string family = "A";
  int rank = 2;
  int max_rank = 0;
  std::string theta;
  std::string theta_prime;
  std::string lambda;
  std::string epsilon;
  std::uint64_t seed = 0;
  int samples = 0;
  int threads = 0;
  bool json = false;
  bool approx = false;
  bool certify = false;
  bool classes = false;
  bool theta_given = false;
  std::string config_path;
};

void apply_config(Options& o, const CLI::App& app) {
  if (o.config_path.empty()) return;
  std::ifstream in(o.config_path);
  if (!in) throw std::invalid_argument("cannot open config file " + o.config_path);
  Json cfg = Json::parse(in);
  auto unset = [&app](const std::string& name) {
    const CLI::Option* opt = app.get_option_no_throw(name);
    return opt == nullptr || opt->count() == 0;
  };
  if (cfg.contains("family") && unset("--family")) o.family = cfg["family"].get<std::string>();
  if (cfg.contains("rank") && unset("--rank")) o.rank = cfg["rank"].get<int>();
  if (cfg.contains("seed") && unset("--seed")) o.seed = cfg["seed"].get<std::uint64_t>();
  if (cfg.contains("samples") && unset("--samples")) o.samples = cfg["samples"].get<int>();
  auto indices = [](const Json& a) {
    std::string out;
    for (const auto& v : a) out += (out.empty() ? "" : ",") + std::to_string(v.get<int>());
    return out;
  };
  if (cfg.contains("theta") && unset("--theta")) o.theta = indices(cfg["theta"]);
  if (cfg.contains("theta_prime") && unset("--theta-prime")) {
    o.theta_prime = indices(cfg["theta_prime"]);
  }
  // lambda/epsilon keyed by class: {"lambda": {"class_0": "1", ...}} or "random"
  if (cfg.contains("lambda") && unset("--lambda")) {
    if (cfg["lambda"].is_string()) {
      o.lambda = cfg["lambda"].get<std::string>();
    } else {
      std::string out;
      for (int c = 0; cfg["lambda"].contains("class_" + std::to_string(c)); ++c) {
        out += (out.empty() ? "" : ",") + cfg["lambda"]["class_" + std::to_string(c)].get<std::string>();
      }
      o.lambda = out;
    }
  }
  if (cfg.contains("epsilon") && unset("--epsilon")) {
    if (cfg["epsilon"].is_string()) {
      o.epsilon = cfg["epsilon"].get<std::string>();
    } else {
      std::string out;
      for (int c = 0; cfg["epsilon"].contains("class_" + std::to_string(c)); ++c) {
        const int e = cfg["epsilon"]["class_" + std::to_string(c)].get<int>();
        out += (out.empty() ? "" : ",") + std::string(e >= 0 ? "+" : "-");
      }
      o.epsilon = out;
    }
  }
}

AHStructure build_structure(const Options& o, const std::vector<int>* theta_override = nullptr,
                            const IACS* iacs_override = nullptr) {
  const auto rs = RootSystem::build(parse_family(o.family), o.rank);
  const auto wb = WeylBasis::build(rs);
  FlagManifold f =
      FlagManifold::build(wb, theta_override ? *theta_override : parse_indices(o.theta));
  InvariantMetric g = parse_lambda(f, o.lambda, o.seed);
  IACS j = iacs_override ? *iacs_override : parse_epsilon_one(f, o.epsilon);
  return AHStructure::build(std::move(f), std::move(g), std::move(j));
}

int cmd_build(const Options& o) {
  const auto rs = RootSystem::build(parse_family(o.family), o.rank);
  const auto wb = WeylBasis::build(rs);
  const FlagManifold f = FlagManifold::build(wb, parse_indices(o.theta));
  emit(flag_json(f), o.json);
  return kExitPass;
}

int cmd_classify(const Options& o) {
  const auto rs = RootSystem::build(parse_family(o.family), o.rank);
  const auto wb = WeylBasis::build(rs);
  const FlagManifold f = FlagManifold::build(wb, parse_indices(o.theta));
  const InvariantMetric g = parse_lambda(f, o.lambda, o.seed);
  Json out;
  if (o.epsilon == "all") {
    Json arr = Json::array();
    for (const IACS& j : parse_epsilon(f, o.epsilon)) {
      const AHStructure s = AHStructure::build(f, g, j);
      Json entry;
      entry["epsilon"] = j.epsilon;
      entry["report"] = class_report_json(classify(s));
      arr.push_back(std::move(entry));
    }
    out["structure"] = structure_json(AHStructure::build(f, g, parse_epsilon_one(f, "")), o.approx);
    out["sweeps"] = arr;
  } else {
    const AHStructure s = AHStructure::build(f, g, parse_epsilon_one(f, o.epsilon));
    out = structure_json(s, o.approx);
    out["classification"] = class_report_json(classify(s));
  }
  emit(out, o.json);
  return kExitPass;
}

int cmd_subflag(const Options& o) {
  const AHStructure s = build_structure(o);
  const Submanifold d = Submanifold::build_subflag(s, parse_indices(o.theta_prime));
  Json out = submanifold_json(d);
  out["lambda"] = structure_json(s)["lambda"];
  out["epsilon"] = structure_json(s)["epsilon"];
  out["seed"] = o.seed;
  bool ok = true;
  if (o.certify || o.classes) {
    CertifyOptions copts;
    copts.check_classes = o.classes;
    const SubCertificate cert = d.certify(copts);
    out["certificate"] = sub_certificate_json(cert);
    ok = cert.holomorphic && cert.minimal && cert.totally_geodesic && cert.minimal_identity &&
         cert.split_identity && cert.comp_equal && cert.required_outcomes_ok;
  }
  emit(out, o.json);
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_emit_table(const Options& o, const std::string& which) {
  const auto rs = RootSystem::build(parse_family(o.family), o.rank);
  const auto wb = WeylBasis::build(rs);
  Json out;
  if (which == "n") {
    out["n_table"] = n_table_json(*wb);
  } else {
    const FlagManifold f = FlagManifold::build(wb, parse_indices(o.theta));
    if (which == "summands") {
      out["summands"] = summands_json(f);
    } else if (which == "r") {
      const InvariantMetric g = parse_lambda(f, o.lambda, o.seed);
      const AHStructure s = AHStructure::build(f, g, parse_epsilon_one(f, o.epsilon));
      out["lambda"] = structure_json(s)["lambda"];
      out["r_table"] = r_table_json(s);
    } else {
      throw std::invalid_argument("emit-table expects one of: n, r, summands");
    }
  }
  emit(out, o.json);
  return kExitPass;
}

int cmd_verify_ask(const Options& o) {
  const int max_rank = o.max_rank > 0 ? o.max_rank : o.rank;
  const int samples = o.samples > 0 ? o.samples : 5;
  const AskCertificate cert =
      verify_ask_universal(parse_family(o.family), max_rank, samples, o.seed);
  emit(ask_certificate_json(cert), o.json);
  return cert.pass ? kExitPass : kExitCheckFailed;
}

int cmd_verify_basis(const Options& o) {
  const BasisCheck check = verify_basis_identities(parse_family(o.family), o.rank);
  Json j;
  j["check"] = "weyl_basis_identities";
  j["family"] = check.family;
  j["rank"] = check.rank;
  j["identity_checks"] = check.identity_checks;
  j["jacobi_triples"] = check.jacobi_triples;
  j["pass"] = check.pass;
  if (check.failure) j["failure"] = *check.failure;
  emit(j, o.json);
  return check.pass ? kExitPass : kExitCheckFailed;
}

Json certify_json_for(const AHStructure& s, const std::vector<int>& theta_prime, bool classes,
                      bool* ok) {
  const Submanifold d = Submanifold::build_subflag(s, theta_prime);
  CertifyOptions copts;
  copts.check_classes = classes;
  const SubCertificate cert = d.certify(copts);
  *ok = cert.minimal && cert.totally_geodesic && cert.minimal_identity && cert.split_identity &&
        cert.comp_equal && cert.required_outcomes_ok;
  Json j = submanifold_json(d);
  j["certificate"] = sub_certificate_json(cert);
  return j;
}

int cmd_verify_tg(const Options& o) {
  const auto fam = parse_family(o.family);
  const int samples = o.samples > 0 ? o.samples : 3;
  Json runs = Json::array();
  bool all_ok = true;
  long pairs_checked = 0;

  if (!o.theta_prime.empty()) {
    for (int k = 0; k < samples; ++k) {
      Options oo = o;
      oo.lambda = "random";
      oo.seed = mix_seed(o.seed, k);
      const AHStructure s = build_structure(oo);
      bool ok = false;
      Json j = certify_json_for(s, parse_indices(o.theta_prime), o.classes, &ok);
      j["lambda_seed"] = oo.seed;
      runs.push_back(std::move(j));
      all_ok = all_ok && ok;
      ++pairs_checked;
    }
  } else {
    // sweep every (Theta, Theta') pair with Theta' not contained in Theta;
    // an explicit --theta restricts the sweep to that Theta
    const auto rs = RootSystem::build(fam, o.rank);
    const auto wb = WeylBasis::build(rs);
    const int rank = o.rank;
    int fixed_tmask = -1;
    if (o.theta_given) {
      fixed_tmask = 0;
      for (int j : parse_indices(o.theta)) fixed_tmask |= 1 << j;
    }
    for (int tmask = 0; tmask < (1 << rank) - 1; ++tmask) {
      if (fixed_tmask >= 0 && tmask != fixed_tmask) continue;
      std::vector<int> theta;
      for (int j = 0; j < rank; ++j) {
        if (tmask & (1 << j)) theta.push_back(j);
      }
      const FlagManifold f = FlagManifold::build(wb, theta);
      for (int pmask = 1; pmask < (1 << rank); ++pmask) {
        if ((pmask & ~tmask) == 0) continue;  // Theta' inside Theta
        std::vector<int> tp;
        for (int j = 0; j < rank; ++j) {
          if (pmask & (1 << j)) tp.push_back(j);
        }
        for (int k = 0; k < samples; ++k) {
          const std::uint64_t seed = mix_seed(o.seed, (tmask << 16) ^ (pmask << 4) ^ k);
          IACS iacs;
          iacs.epsilon.assign(f.num_summands(), 1);
          const AHStructure s = AHStructure::build(f, random_metric(f, seed), iacs);
          bool ok = false;
          Json j = certify_json_for(s, tp, false, &ok);
          all_ok = all_ok && ok;
          if (!ok) runs.push_back(std::move(j));  // echoed only on failure
          ++pairs_checked;
        }
      }
    }
  }
  Json out;
  out["check"] = "totally_geodesic_subflags";
  out["pass"] = all_ok;
  out["configurations"] = pairs_checked;
  out["runs"] = runs;
  emit(out, o.json);
  return all_ok ? kExitPass : kExitCheckFailed;
}

int cmd_verify_sk(const Options& o) {
  // class heredity (including SK) from the ambient structure to the sub-flag
  const AHStructure s = build_structure(o);
  const Submanifold d = Submanifold::build_subflag(s, parse_indices(o.theta_prime));
  CertifyOptions copts;
  copts.check_classes = true;
  const SubCertificate cert = d.certify(copts);
  bool ok = cert.minimal && cert.required_outcomes_ok;
  for (const auto& [name, preserved] : cert.class_preserved) ok = ok && preserved;
  Json out;
  out["check"] = "class_heredity";
  out["pass"] = ok;
  out["certificate"] = sub_certificate_json(cert);
  emit(out, o.json);
  return ok ? kExitPass : kExitCheckFailed;
}

int cmd_verify_example(const Options& o) {
  // the worked sl(8) example: A_7, Theta = {1,2,5}, Theta' = {1,2,3,7}
  Options oo = o;
  oo.family = "A";
  oo.rank = 7;
  oo.theta = "1,2,5";
  oo.theta_prime = "1,2,3,7";
  const int samples = o.samples > 0 ? o.samples : 2;

  const auto rs = RootSystem::build(Family::A, 7);
  const auto wb = WeylBasis::build(rs);
  const FlagManifold f = FlagManifold::build(wb, parse_indices(oo.theta));

  Json out;
  out["check"] = "sl8_example";
  bool ok = true;

  const std::set<std::string> expect_rtheta = {"a(1,2)", "a(2,1)", "a(2,3)", "a(3,2)",
                                               "a(1,3)", "a(3,1)", "a(5,6)", "a(6,5)"};
  std::set<std::string> got_rtheta;
  for (RootId id : f.r_theta()) got_rtheta.insert(rs->label(id));
  ok = ok && (got_rtheta == expect_rtheta);
  out["r_theta_matches"] = (got_rtheta == expect_rtheta);
  out["dim_real"] = f.dim_real();
  ok = ok && f.dim_real() == 48;

  Json runs = Json::array();
  for (int k = 0; k < samples; ++k) {
    oo.lambda = "random";
    oo.seed = mix_seed(o.seed, k);
    for (const std::string eps : {"canonical", "alternating"}) {
      IACS iacs;
      for (int c = 0; c < f.num_summands(); ++c) {
        iacs.epsilon.push_back(eps == "canonical" || c % 2 == 0 ? 1 : -1);
      }
      const AHStructure s = AHStructure::build(f, random_metric(f, oo.seed), iacs);
      const Submanifold d = Submanifold::build_subflag(s, parse_indices(oo.theta_prime));
      if (k == 0 && eps == "canonical") {
        const std::set<std::string> expect_rp = {
            "a(1,2)", "a(2,1)", "a(2,3)", "a(3,2)", "a(1,3)", "a(3,1)", "a(3,4)",
            "a(4,3)", "a(1,4)", "a(4,1)", "a(2,4)", "a(4,2)", "a(7,8)", "a(8,7)"};
        std::set<std::string> got_rp;
        for (RootId id : d.r_prime()) got_rp.insert(rs->label(id));
        ok = ok && (got_rp == expect_rp);
        out["r_prime_matches"] = (got_rp == expect_rp);
        out["subflag_dim_real"] = d.dim_real();
        out["codimension"] = d.codimension();
        ok = ok && d.dim_real() == 8;
      }
      CertifyOptions copts;
      copts.check_classes = false;
      copts.check_split_identity = false;
      const SubCertificate cert = d.certify(copts);
      const bool run_ok = cert.minimal && cert.totally_geodesic && cert.required_outcomes_ok;
      runs.push_back(Json{{"seed", oo.seed},
                          {"epsilon", eps},
                          {"minimal", cert.minimal},
                          {"totally_geodesic", cert.totally_geodesic}});
      ok = ok && run_ok;
    }
  }
  out["certify_runs"] = runs;
  out["pass"] = ok;
  emit(out, o.json);
  return ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariant geometry on generalized flag manifolds"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--family", o.family, "root system family: A, B, C or D");
    cmd->add_option("--rank", o.rank, "rank of the root system");
    cmd->add_option("--theta", o.theta, "simple roots of Theta, 1-based, e.g. 1,2,5");
    cmd->add_option("--theta-prime", o.theta_prime, "simple roots of Theta'");
    cmd->add_option("--lambda", o.lambda, "metric: comma list per class, or 'random'");
    cmd->add_option("--epsilon", o.epsilon, "signs per class, e.g. +,-,+ (or 'all')");
    cmd->add_option("--seed", o.seed, "seed for random lambda draws");
    cmd->add_option("--samples", o.samples, "number of random draws");
    cmd->add_option("--threads", o.threads, "worker threads (default: all)");
    cmd->add_flag("--json", o.json, "machine-readable output");
    cmd->add_flag("--approx", o.approx, "add decimal approximations (display only)");
    cmd->add_option("--config", o.config_path, "JSON config file with defaults");
  };

  CLI::App* build = app.add_subcommand("build", "construct a flag manifold and print its data");
  add_common(build);
  CLI::App* cls = app.add_subcommand("classify", "Gray-Hervella class membership");
  add_common(cls);
  CLI::App* verify = app.add_subcommand("verify", "machine-check one of the main results");
  verify->require_subcommand(1);
  CLI::App* v_ask = verify->add_subcommand("ask", "codifferential vanishes for every structure");
  CLI::App* v_sk = verify->add_subcommand("sk", "class heredity to holomorphic sub-flags");
  CLI::App* v_tg = verify->add_subcommand("tg", "sub-flags are totally geodesic");
  CLI::App* v_basis = verify->add_subcommand("basis", "Weyl basis identity suite");
  CLI::App* v_example = verify->add_subcommand("example", "reproduce the worked sl(8) example");
  for (CLI::App* c : {v_ask, v_sk, v_tg, v_basis, v_example}) add_common(c);
  int max_rank = 0;
  v_ask->add_option("--max-rank", max_rank, "sweep every rank up to this one");
  CLI::App* subflag = app.add_subcommand("subflag", "build a sub-flag submanifold");
  add_common(subflag);
  subflag->add_flag("--certify", o.certify, "run the exact certificate");
  subflag->add_flag("--classes", o.classes, "include the class heredity scan");
  std::string table;
  CLI::App* emit_table = app.add_subcommand("emit-table", "dump n / r / summand tables");
  emit_table->add_option("table", table, "one of: n, r, summands")->required();
  add_common(emit_table);

  try {
    app.parse(argc, argv);
    o.max_rank = max_rank;
    for (CLI::App* c :
         {build, cls, v_ask, v_sk, v_tg, v_basis, v_example, subflag, emit_table}) {
      if (!c->parsed()) continue;
      const CLI::Option* theta_opt = c->get_option_no_throw("--theta");
      o.theta_given = theta_opt != nullptr && theta_opt->count() > 0;
      apply_config(o, *c);
      if (!o.theta.empty()) o.theta_given = true;
    }
    set_threads(o.threads);

    if (build->parsed()) return cmd_build(o);
    if (cls->parsed()) return cmd_classify(o);
    if (v_ask->parsed()) return cmd_verify_ask(o);
    if (v_sk->parsed()) return cmd_verify_sk(o);
    if (v_tg->parsed()) return cmd_verify_tg(o);
    if (v_basis->parsed()) return cmd_verify_basis(o);
    if (v_example->parsed()) return cmd_verify_example(o);
    if (subflag->parsed()) return cmd_subflag(o);
    if (emit_table->parsed()) return cmd_emit_table(o, table);
    return kExitBadInput;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
