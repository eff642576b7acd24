#include <doctest.h>

#include "mrbld/deformation.hpp"
#include "mrbld/random_instances.hpp"

using namespace mrbld;

namespace {

EquivalenceJet random_equivalence(Rng& rng, std::size_t dim, std::size_t order) {
  EquivalenceJet e;
  for (std::size_t i = 0; i < order; ++i) e.psi.push_back(random_matrix(rng, dim, dim, -2, 2));
  return e;
}

std::size_t slot_embedded_cocycle_dim(const Representation& r) {
  const Matrix m = operator_matrix(r, ComplexKind::mrbld, 2);
  return nullspace_basis(m.block(0, 0, m.rows(), m.cols() - r.dimV)).size();
}

}  // namespace

TEST_CASE("bracket cochain and zero jets") {
  const MRBLieDerPair p = catalog::example_pair();
  const Cochain mu = bracket_cochain(p.algebra);
  CHECK(mu.at({0, 1}) == Vector{0, 1});
  const DeformationJet z = DeformationJet::zero(p, 3);
  for (std::size_t n = 1; n <= 3; ++n) CHECK(check_order(z, n).ok());
  CHECK_THROWS_AS(check_order(z, 4), DegreeOutOfRange);
  DeformationJet bad = z;
  bad.R.pop_back();
  CHECK_THROWS_AS(check_shapes(bad), DimensionMismatch);
}

TEST_CASE("trivial deformations satisfy every order") {
  Rng rng(51);
  for (int trial = 0; trial < 8; ++trial) {
    const MRBLieDerPair p = random_pair(rng);
    const DeformationJet j = apply_equivalence(DeformationJet::zero(p, 3), random_equivalence(rng, p.dim(), 2));
    for (std::size_t n = 1; n <= 3; ++n) {
      INFO("order " << n);
      CHECK(check_order(j, n).ok());
    }
  }
}

TEST_CASE("a linear deformation of the derivation") {
  // d_t = d + t d' with d' a derivation commuting with R is exact.
  const MRBLieDerPair p = catalog::example_pair();
  const auto ders = derivations_commuting_with(p.algebra, p.R);
  REQUIRE_FALSE(ders.empty());
  DeformationJet j = DeformationJet::zero(p, 2);
  j.d[0] = ders.back();
  CHECK(check_order(j, 1).ok());
  CHECK(check_order(j, 2).ok());
  j.d[0](0, 1) += 1;
  CHECK_FALSE(check_order(j, 1).ok());
  CHECK_THROWS_AS(infinitesimal(j), OrderOneFails);
}

TEST_CASE("order-1 jets from the nullspace give cocycle infinitesimals") {
  Rng rng(52);
  for (int trial = 0; trial < 15; ++trial) {
    const MRBLieDerPair p = random_pair(rng);
    CHECK(nullspace_basis(order1_system(p)).size() == slot_embedded_cocycle_dim(adjoint_representation(p)));
    const DeformationJet j = sample_order1_jet(rng, p);
    CHECK(check_order(j, 1).ok());
    const Infinitesimal inf = infinitesimal(j);
    CHECK(inf.verdict.cocycle);
    CHECK(inf.quad.f == j.mu[0]);
    CHECK(inf.quad.g == Cochain::from_matrix(j.R[0]));
    CHECK(inf.quad.h == Cochain::from_matrix(j.d[0]));
    CHECK(inf.quad.s.is_zero());
  }
}

TEST_CASE("equivalent jets have cohomologous infinitesimals") {
  Rng rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const MRBLieDerPair p = random_pair(rng);
    const DeformationJet j = sample_order1_jet(rng, p);
    const EquivalenceJet e = random_equivalence(rng, p.dim(), 1);
    const DeformationJet j2 = apply_equivalence(j, e);
    CHECK(infinitesimals_cohomologous(j, j2, e));
    EquivalenceJet other = e;
    other.psi[0](0, 0) += 1;
    const bool differs = !(infinitesimal(j2).quad == infinitesimal(apply_equivalence(j, other)).quad);
    if (differs) CHECK_FALSE(infinitesimals_cohomologous(j, j2, other));
  }
}

TEST_CASE("equivalences compose") {
  Rng rng(54);
  const MRBLieDerPair p = random_pair(rng);
  const DeformationJet j = apply_equivalence(DeformationJet::zero(p, 2), random_equivalence(rng, p.dim(), 2));
  const EquivalenceJet e1 = random_equivalence(rng, p.dim(), 2), e2 = random_equivalence(rng, p.dim(), 2);
  CHECK(apply_equivalence(apply_equivalence(j, e1), e2) == apply_equivalence(j, compose(e1, e2, 2)));
  CHECK(apply_equivalence(j, EquivalenceJet{{Matrix(p.dim(), p.dim()), Matrix(p.dim(), p.dim())}}) == j);
}

TEST_CASE("rigidity report") {
  const MRBLieDerPair ab{LieAlgebra(2), 0, Matrix(2, 2), Matrix(2, 2)};
  const RigidityReport r = rigidity_report(ab);
  CHECK(r.dimH2 == 12);
  CHECK_FALSE(r.rigid_by_criterion);
  CHECK(r.candidates.size() == 12);
  Rng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const MRBLieDerPair p = random_pair(rng);
    const RigidityReport rr = rigidity_report(p);
    CHECK(rr.rigid_by_criterion == (rr.dimH2 == 0));
    CHECK(rr.candidates.size() == rr.dimH2);
  }
}
