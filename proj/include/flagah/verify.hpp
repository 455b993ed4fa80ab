#pragma once

#include <optional>
#include <string>

#include "flagah/weyl.hpp"

namespace flagah {

// Weyl-basis identity suite for one root system: the normalization
// B(X_alpha, X_{-alpha}) = 1, vanishing of all other Killing pairings,
// n_{a,b} = -n_{-a,-b} = -n_{b,a}, the cyclic relation on zero-sum triples,
// n nonzero exactly on root pairs, [X_a, X_{-a}] = H_a, and the Jacobi
// identity on all basis triples.
struct BasisCheck {
  std::string family;
  int rank = 0;
  long identity_checks = 0;
  long jacobi_triples = 0;
  bool pass = false;
  std::optional<std::string> failure;
};

BasisCheck verify_basis_identities(Family family, int rank);

}  // namespace flagah
