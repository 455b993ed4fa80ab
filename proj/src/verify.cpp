#include "flagah/verify.hpp"

namespace flagah {

BasisCheck verify_basis_identities(Family family, int rank) {
  BasisCheck out;
  out.family = family_str(family);
  out.rank = rank;
  const auto rs = RootSystem::build(family, rank);
  const auto wb = WeylBasis::build(rs);
  const int nr = rs->num_roots();

  auto fail = [&out](const std::string& msg) {
    if (!out.failure) out.failure = msg;
  };

  for (RootId a = 0; a < nr; ++a) {
    // eq. normalization and the Riesz bracket
    const CScalar pairing =
        wb->killing(AlgebraVector::x(a), AlgebraVector::x(rs->negate(a)));
    ++out.identity_checks;
    if (pairing != CScalar(1)) fail("B(X_a, X_-a) != 1 at " + rs->label(a));

    const AlgebraVector h = wb->bracket(AlgebraVector::x(a), AlgebraVector::x(rs->negate(a)));
    ++out.identity_checks;
    if (!h.root_terms().empty()) fail("[X_a, X_-a] has a root part at " + rs->label(a));
    for (int j = 0; j < rank; ++j) {
      const CScalar c = h.cartan().empty() ? CScalar() : h.cartan()[j];
      ++out.identity_checks;
      if (c != CScalar(Scalar(Rational(rs->root(a).coords[j])))) {
        fail("[X_a, X_-a] != H_a at " + rs->label(a));
      }
    }

    for (RootId b = 0; b < nr; ++b) {
      if (b != rs->negate(a)) {
        ++out.identity_checks;
        if (wb->killing(AlgebraVector::x(a), AlgebraVector::x(b)) != CScalar()) {
          fail("B(X_a, X_b) != 0 off pairs at " + rs->label(a) + ", " + rs->label(b));
        }
      }
      const RootId sum = rs->sum_root(a, b);
      ++out.identity_checks;
      if (wb->n(a, b).is_zero() != (sum == kNoRoot)) {
        fail("n_{a,b} support wrong at " + rs->label(a) + ", " + rs->label(b));
      }
      if (sum == kNoRoot) continue;
      out.identity_checks += 4;
      if (wb->n(a, b) != -wb->n(rs->negate(a), rs->negate(b))) {
        fail("n_{a,b} != -n_{-a,-b} at " + rs->label(a) + ", " + rs->label(b));
      }
      if (wb->n(a, b) != -wb->n(b, a)) {
        fail("n_{a,b} != -n_{b,a} at " + rs->label(a) + ", " + rs->label(b));
      }
      const RootId c = rs->negate(sum);
      if (wb->n(a, b) != wb->n(b, c) || wb->n(a, b) != wb->n(c, a)) {
        fail("cyclic relation fails at " + rs->label(a) + ", " + rs->label(b));
      }
    }
  }

  // Jacobi on all basis triples (unordered with repetition)
  std::vector<AlgebraVector> basis;
  for (int j = 0; j < rank; ++j) basis.push_back(AlgebraVector::cartan_basis(rank, j));
  for (RootId id = 0; id < nr; ++id) basis.push_back(AlgebraVector::x(id));
  const int d = static_cast<int>(basis.size());
  for (int u = 0; u < d; ++u) {
    for (int v = u; v < d; ++v) {
      for (int w = v; w < d; ++w) {
        AlgebraVector sum = wb->bracket(wb->bracket(basis[u], basis[v]), basis[w]);
        sum.axpy(CScalar(1), wb->bracket(wb->bracket(basis[v], basis[w]), basis[u]));
        sum.axpy(CScalar(1), wb->bracket(wb->bracket(basis[w], basis[u]), basis[v]));
        ++out.jacobi_triples;
        if (!sum.is_zero()) {
          fail("Jacobi fails on basis triple (" + std::to_string(u) + "," + std::to_string(v) +
               "," + std::to_string(w) + ")");
        }
      }
    }
  }

  out.pass = !out.failure.has_value();
  return out;
}

}  // namespace flagah
