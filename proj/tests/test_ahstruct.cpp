#include <doctest.h>

#include "helpers.hpp"

using namespace flagah;
using namespace flagah::testing;

namespace {

AHStructure a2_structure(std::vector<long> lambda = {1, 1, 2}, std::vector<int> eps = {1, 1, 1}) {
  return make_structure(Family::A, 2, {}, std::move(lambda), std::move(eps));
}

}  // namespace

TEST_CASE("metric construction validates input") {
  auto rs = RootSystem::build(Family::A, 2);
  auto wb = WeylBasis::build(rs);
  FlagManifold f = FlagManifold::build(wb, {});
  InvariantMetric g;
  g.lambda = {Rational(1), Rational(1)};  // missing a class
  IACS j;
  j.epsilon = {1, 1, 1};
  CHECK_THROWS_AS(AHStructure::build(f, g, j), std::invalid_argument);
  g.lambda = {Rational(1), Rational(1), Rational(-2)};
  CHECK_THROWS_AS(AHStructure::build(f, g, j), std::invalid_argument);
  g.lambda = {Rational(1), Rational(1), Rational(2)};
  j.epsilon = {1, 0, 1};
  CHECK_THROWS_AS(AHStructure::build(f, g, j), std::invalid_argument);
  j.epsilon = {1, -1, 1};
  CHECK_NOTHROW(AHStructure::build(f, g, j));
}

TEST_CASE("metric values on the Weyl and real bases") {
  const AHStructure s = a2_structure();
  const RootSystem& rs = s.rs();
  const RootId a1 = rs.simple(0);
  const RootId a13 = rs.sum_root(a1, rs.simple(1));
  // complex-bilinear extension of the positive-definite metric:
  // g(X_alpha, X_{-alpha}) = -lambda_alpha
  CHECK(s.metric_eval(AlgebraVector::x(a1), AlgebraVector::x(rs.negate(a1))) ==
        CScalar(Scalar(Rational(-1))));
  CHECK(s.metric_eval(AlgebraVector::x(a13), AlgebraVector::x(rs.negate(a13))) ==
        CScalar(Scalar(Rational(-2))));
  CHECK(s.metric_eval(AlgebraVector::x(a1), AlgebraVector::x(rs.simple(1))) == CScalar());
  // g(A, A) = 2 lambda, g(iS, iS) = 2 lambda, g(A, iS) = 0
  const auto& f = s.flag();
  CHECK(s.metric_eval(f.a_vec(a13), f.a_vec(a13)) == CScalar(Scalar(Rational(4))));
  CHECK(s.metric_eval(f.is_vec(a13), f.is_vec(a13)) == CScalar(Scalar(Rational(4))));
  CHECK(s.metric_eval(f.a_vec(a13), f.is_vec(a13)) == CScalar());
}

TEST_CASE("metric rejects support outside m") {
  const AHStructure s = make_structure(Family::A, 2, {0}, {1}, {1});
  const RootId a1 = s.rs().simple(0);  // in R(Theta)
  CHECK_THROWS_AS(s.metric_eval(AlgebraVector::x(a1), AlgebraVector::x(s.rs().negate(a1))),
                  std::domain_error);
  CHECK_THROWS_AS(s.metric_eval(AlgebraVector::cartan_basis(2, 0), AlgebraVector::x(a1)),
                  std::domain_error);
}

TEST_CASE("J acts by i eps and squares to -1") {
  const AHStructure s = a2_structure({1, 1, 1}, {1, 1, -1});
  const RootSystem& rs = s.rs();
  const RootId a1 = rs.simple(0);
  const RootId a13 = rs.sum_root(a1, rs.simple(1));
  CHECK(s.apply_j(AlgebraVector::x(a1)) == AlgebraVector::x(a1, CScalar::i()));
  CHECK(s.apply_j(AlgebraVector::x(a13)) == AlgebraVector::x(a13, -CScalar::i()));
  CHECK(s.apply_j(AlgebraVector::x(rs.negate(a13))) ==
        AlgebraVector::x(rs.negate(a13), CScalar::i()));
  for (const auto& v : s.flag().real_basis()) {
    CHECK(s.apply_j(s.apply_j(v)) == -v);
  }
  // J(A_alpha) = i eps_alpha S_alpha, i.e. eps_alpha * iS_alpha
  CHECK(s.apply_j(s.flag().a_vec(a13)) == CScalar(-1) * s.flag().is_vec(a13));
}

TEST_CASE("compatibility g(Jv, Jw) = g(v, w)") {
  for (std::uint64_t seed : {11u, 12u}) {
    const AHStructure s =
        make_random_structure(Family::B, 2, {}, {1, -1, 1, -1}, seed);
    const auto basis = s.flag().real_basis();
    for (const auto& v : basis) {
      for (const auto& w : basis) {
        CHECK(s.metric_eval(s.apply_j(v), s.apply_j(w)) == s.metric_eval(v, w));
      }
    }
  }
}

TEST_CASE("the J-frame is orthonormal") {
  const AHStructure s = a2_structure({1, 3, 2}, {1, -1, 1});
  const auto& frame = s.j_frame();
  REQUIRE(frame.size() == 3);
  std::vector<AlgebraVector> all;
  for (const auto& p : frame) {
    all.push_back(p.v);
    all.push_back(p.jv);
  }
  CHECK(static_cast<int>(all.size()) == s.flag().dim_real());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      CHECK(s.metric_eval(all[i], all[j]) == (i == j ? CScalar(1) : CScalar()));
    }
  }
  // JV really is J applied to V
  for (const auto& p : frame) CHECK(s.apply_j(p.v) == p.jv);
}

TEST_CASE("omega: antisymmetry and frame values") {
  const AHStructure s = a2_structure({2, 5, 3}, {1, 1, -1});
  const auto basis = s.flag().real_basis();
  for (const auto& v : basis) {
    for (const auto& w : basis) {
      CHECK(s.omega(v, w) == -s.omega(w, v));
    }
    CHECK(s.omega(v, v) == CScalar());
  }
  // Omega(V, JV) = g(V, J^2 V) = -g(V, V) = -1
  for (const auto& p : s.j_frame()) {
    CHECK(s.omega(p.v, p.jv) == CScalar(-1));
  }
  // Omega(X_alpha, X_{-alpha}) = g(X_alpha, i eps_{-alpha} X_{-alpha}) = i eps_alpha lambda_alpha
  const RootSystem& rs = s.rs();
  const RootId a13 = rs.sum_root(rs.simple(0), rs.simple(1));
  CHECK(s.omega(AlgebraVector::x(a13), AlgebraVector::x(rs.negate(a13))) ==
        CScalar(Scalar(), Scalar(Rational(-3))));  // eps = -1, lambda = 3
}

TEST_CASE("J commutes with the isotropy action on m") {
  for (const auto& [fam, rank, theta] :
       {std::tuple{Family::A, 3, std::vector<int>{0}}, {Family::B, 3, {1, 2}},
        {Family::C, 3, {0}}}) {
    const AHStructure s = make_random_structure(fam, rank, theta, {}, 99);
    const auto gens = s.flag().isotropy_generators();
    for (RootId a : s.flag().r_complement()) {
      const AlgebraVector x = AlgebraVector::x(a);
      for (const auto& y : gens) {
        // m-projection of [Y, J X] equals J of the m-projection of [Y, X]
        const Geometry geo(s);
        const AlgebraVector lhs = geo.m_project(s.wb().bracket(y, s.apply_j(x)));
        const AlgebraVector rhs = s.apply_j(geo.m_project(s.wb().bracket(y, x)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("number of distinct iacs is 2^classes") {
  const FlagManifold f =
      FlagManifold::build(WeylBasis::build(RootSystem::build(Family::A, 2)), {});
  CHECK(f.num_summands() == 3);
  CHECK((1 << f.num_summands()) == 8);
}
