#include "flagah/report.hpp"

#include "flagah/geometry.hpp"

namespace flagah {

Json flag_json(const FlagManifold& f) {
  const RootSystem& rs = f.rs();
  Json j;
  j["family"] = family_str(rs.family());
  j["rank"] = rs.rank();
  j["num_roots"] = rs.num_roots();
  j["num_positive"] = rs.num_positive();
  Json theta = Json::array();
  for (int t : f.theta()) {
    theta.push_back(Json{{"index", t + 1}, {"root", rs.label(rs.simple(t))}});
  }
  j["theta"] = theta;
  Json rtheta = Json::array();
  for (RootId id : f.r_theta()) rtheta.push_back(rs.label(id));
  j["r_theta"] = rtheta;
  j["r_theta_size"] = f.r_theta().size();
  j["complement_positive_size"] = f.m_positive().size();
  j["dim_real"] = f.dim_real();
  j["summands"] = summands_json(f);
  j["num_iacs"] = (1L << f.num_summands());
  return j;
}

Json summands_json(const FlagManifold& f) {
  Json arr = Json::array();
  for (int c = 0; c < f.num_summands(); ++c) {
    Json cls;
    cls["class"] = "class_" + std::to_string(c);
    Json roots = Json::array();
    for (RootId id : f.summands()[c]) roots.push_back(f.rs().label(id));
    cls["roots"] = roots;
    cls["dim_real"] = 2 * f.summands()[c].size();
    arr.push_back(cls);
  }
  return arr;
}

Json structure_json(const AHStructure& s, bool approx) {
  Json j = flag_json(s.flag());
  Json lambda = Json::object(), eps = Json::object();
  for (int c = 0; c < s.flag().num_summands(); ++c) {
    const std::string key = "class_" + std::to_string(c);
    lambda[key] = rational_str(s.metric().lambda[c]);
    if (approx) {
      lambda[key + "_approx"] = Scalar(s.metric().lambda[c]).approx();
    }
    eps[key] = s.iacs().epsilon[c];
  }
  j["lambda"] = lambda;
  j["epsilon"] = eps;
  return j;
}

Json class_report_json(const ClassReport& r) {
  Json j;
  Json flags;
  for (const auto& [name, value] : r.flags) flags[name] = value;
  j["flags"] = flags;
  Json wit = Json::object();
  for (const auto& [name, w] : r.witnesses) {
    wit[name] = Json{{"tuple", w.tuple}, {"value", w.value}};
  }
  j["witnesses"] = wit;
  return j;
}

Json ask_certificate_json(const AskCertificate& c) {
  Json j;
  j["check"] = "ask_universality";
  j["family"] = c.family;
  j["max_rank"] = c.max_rank;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  j["pass"] = c.pass;
  Json ranks = Json::array();
  for (const auto& r : c.ranks) {
    ranks.push_back(Json{{"rank", r.rank},
                         {"theta_subsets", r.theta_subsets},
                         {"theta_skipped", r.theta_skipped},
                         {"configurations", r.configurations},
                         {"term_checks", r.term_checks}});
  }
  j["ranks"] = ranks;
  if (c.violation) {
    Json v;
    v["tensor"] = "delta_omega";
    v["rank"] = c.violation->rank;
    Json theta = Json::array();
    for (int t : c.violation->theta) theta.push_back(t + 1);
    v["theta"] = theta;
    v["epsilon"] = c.violation->epsilon;
    v["lambda"] = c.violation->lambda;
    v["input"] = c.violation->input;
    v["value"] = c.violation->value;
    j["counterexample"] = v;
  }
  return j;
}

Json sub_certificate_json(const SubCertificate& c) {
  Json j;
  j["holomorphic"] = c.holomorphic;
  j["totally_geodesic"] = c.totally_geodesic;
  j["minimal"] = c.minimal;
  j["mean_curvature_zero"] = c.mean_curvature_zero;
  j["normal_partial_codiff_zero"] = c.normal_partial_codiff_zero;
  j["minimal_identity"] = c.minimal_identity;
  j["split_identity"] = c.split_identity;
  j["normal_codiff_zero"] = c.normal_codiff_zero;
  j["comp_equal"] = c.comp_equal;
  j["required_outcomes_ok"] = c.required_outcomes_ok;
  if (c.classes_checked) {
    j["classes"] = Json{{"ambient", class_report_json(c.ambient_classes)},
                        {"submanifold", class_report_json(c.intrinsic_classes)}};
    Json pres = Json::object();
    for (const auto& [name, ok] : c.class_preserved) pres[name] = ok;
    j["class_preserved"] = pres;
  }
  Json fails = Json::object();
  for (const auto& [key, w] : c.failures) {
    fails[key] = Json{{"where", w.where}, {"value", w.value}};
  }
  j["witnesses"] = fails;
  return j;
}

Json submanifold_json(const Submanifold& d) {
  const RootSystem& rs = d.ambient().rs();
  Json j;
  j["kind"] = d.kind() == SubKind::subflag ? "subflag" : "subalgebra";
  if (d.kind() == SubKind::subflag) {
    Json tp = Json::array();
    for (int t : d.theta_prime()) {
      tp.push_back(Json{{"index", t + 1}, {"root", rs.label(rs.simple(t))}});
    }
    j["theta_prime"] = tp;
    Json rp = Json::array();
    for (RootId id : d.r_prime()) rp.push_back(rs.label(id));
    j["r_prime"] = rp;
    j["r_prime_size"] = d.r_prime().size();
  }
  Json rn = Json::array();
  for (RootId id : d.r_n()) rn.push_back(rs.label(id));
  j["r_n"] = rn;
  j["dim_real"] = d.dim_real();
  j["codimension"] = d.codimension();
  return j;
}

Json n_table_json(const WeylBasis& wb) {
  const RootSystem& rs = wb.rs();
  Json rows = Json::array();
  for (RootId a = 0; a < rs.num_roots(); ++a) {
    for (RootId b = 0; b < rs.num_roots(); ++b) {
      if (rs.sum_root(a, b) == kNoRoot) continue;
      rows.push_back(Json{{"alpha", rs.label(a)}, {"beta", rs.label(b)}, {"n", wb.n(a, b).str()}});
    }
  }
  return rows;
}

Json r_table_json(const AHStructure& s) {
  const RootSystem& rs = s.rs();
  const ConnectionTable t = ConnectionTable::build(s);
  Json rows = Json::array();
  for (RootId a : s.flag().r_complement()) {
    for (RootId b : s.flag().r_complement()) {
      const RootId sum = rs.sum_root(a, b);
      if (sum == kNoRoot || s.flag().in_r_theta(sum)) continue;
      rows.push_back(Json{{"alpha", rs.label(a)}, {"beta", rs.label(b)}, {"r", t.r(a, b).str()}});
    }
  }
  return rows;
}

namespace {

void render_impl(const Json& j, std::string& out, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        out += pad + k + ":\n";
        render_impl(v, out, depth + 1);
      } else {
        out += pad + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        out += pad + "-\n";
        render_impl(v, out, depth + 1);
      } else {
        out += pad + "- " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
      }
    }
  } else {
    out += pad + j.dump() + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j, int indent) {
  std::string out;
  render_impl(j, out, indent);
  return out;
}

}  // namespace flagah
