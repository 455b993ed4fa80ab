#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagah/geometry.hpp"
#include "flagah/parallel.hpp"

namespace flagah {

// Witness for a failed class condition: the first basis tuple (in canonical
// order) where the defining condition is nonzero, with the value.
struct Witness {
  std::vector<std::string> tuple;
  std::string value;
};

inline const std::vector<std::string>& class_names() {
  static const std::vector<std::string> names = {"K", "AK", "NK", "QK", "ASK", "SK", "H"};
  return names;
}

struct ClassReport {
  std::map<std::string, bool> flags;
  std::map<std::string, Witness> witnesses;  // keyed by failed class

  bool at(const std::string& name) const { return flags.at(name); }
  friend bool operator==(const ClassReport& a, const ClassReport& b);
};

// Gray-Hervella membership scan over the real tangent basis:
//   K: (nabla_X J)Y = 0, AK: dOmega = 0, NK: (nabla_X J)Y + (nabla_Y J)X = 0,
//   QK: (nabla_X J)Y + (nabla_JX J)JY = 0, ASK: delta Omega = 0, H: N = 0,
//   SK: ASK and H. All checks exact.
ClassReport classify(const AHStructure& s, Exec exec = Exec::parallel);

// straightforward single-threaded reference implementation, kept for testing
ClassReport classify_serial(const AHStructure& s);

// throws std::logic_error if the report violates the inclusion lattice
// (K => AK,NK,QK,H,SK; AK/NK => QK; QK => ASK; SK <=> ASK and H)
void check_inclusion_lattice(const ClassReport& r);

// ---- ASK universality sweep -------------------------------------------------

struct AskViolation {
  int rank = 0;
  std::vector<int> theta;             // 0-based indices
  std::vector<int> epsilon;           // per class
  std::vector<std::string> lambda;    // per class
  std::string input;                  // frame term / basis label
  std::string value;
};

struct AskRankSummary {
  int rank = 0;
  int theta_subsets = 0;   // visited (including the skipped degenerate one)
  int theta_skipped = 0;   // Theta = Sigma (a point)
  long configurations = 0; // (Theta, epsilon, lambda draw) triples checked
  long term_checks = 0;    // individual frame-term evaluations
};

struct AskCertificate {
  std::string family;
  int max_rank = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<AskRankSummary> ranks;
  bool pass = false;
  std::optional<AskViolation> violation;
};

// Sweeps every Theta proper-subset of Sigma, every epsilon assignment over the
// summand classes and `samples` seeded lambda draws per configuration, checking
// that both frame-term families of the codifferential vanish on every basis
// vector (hence delta Omega = 0, exactly).
AskCertificate verify_ask_universal(Family family, int max_rank, int samples,
                                    std::uint64_t seed, Exec exec = Exec::parallel);

// single (family, rank) sweep used by the certificate and the acceptance suite
AskRankSummary sweep_ask_rank(Family family, int rank, int samples, std::uint64_t seed,
                              Exec exec, std::optional<AskViolation>& violation);

// random metric: one positive rational per class with num/den in [1, 20]
InvariantMetric random_metric(const FlagManifold& f, std::uint64_t seed);

}  // namespace flagah
