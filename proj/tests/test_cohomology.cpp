#include <doctest.h>

#include "mrbld/cohomology.hpp"
#include "mrbld/random_instances.hpp"
#include "oracles.hpp"

using namespace mrbld;

namespace {

Representation abelian_zero(std::size_t n) {
  return adjoint_representation(MRBLieDerPair{LieAlgebra(n), 0, Matrix(n, n), Matrix(n, n)});
}

}  // namespace

TEST_CASE("complex kinds and slot layout") {
  CHECK(parse_complex_kind("MRBLD") == ComplexKind::mrbld);
  CHECK_FALSE(parse_complex_kind("dr").has_value());
  CHECK(to_string(ComplexKind::mrbo) == "mrbo");
  CHECK(slot_degrees(ComplexKind::mrbld, 1) == std::vector<std::size_t>{1});
  CHECK(slot_degrees(ComplexKind::mrbld, 3) == std::vector<std::size_t>{3, 2, 2, 1});
  CHECK(slot_degrees(ComplexKind::mrbla, 2) == std::vector<std::size_t>{2, 1});
  CHECK_THROWS_AS(slot_degrees(ComplexKind::mrbla, 0), DegreeOutOfRange);
  CHECK_THROWS_AS(slot_degrees(ComplexKind::mrbld, 0), DegreeOutOfRange);
}

TEST_CASE("abelian benchmark") {
  // All operators vanish, so Z^2 is the whole degree-2 space:
  // C(2,2)*2 + 2*C(2,1)*2 + C(2,0)*2 = 2 + 8 + 2 = 12, and B^2 = 0.
  const Representation r = abelian_zero(2);
  const CohomologyResult h2 = cohomology(r, ComplexKind::mrbld, 2);
  CHECK(h2.dimZ == 12);
  CHECK(h2.dimB == 0);
  CHECK(h2.dimH == 12);
  CHECK(cohomology(r, ComplexKind::ce, 1).dimH == 4);
  CHECK(cohomology(r, ComplexKind::mrbld, 1).dimH == 4);
}

TEST_CASE("example instance: first Chevalley-Eilenberg cohomology vanishes") {
  // Every derivation of [e0,e1] = e1 is inner.
  const CohomologyResult h = cohomology(adjoint_representation(catalog::example_pair()), ComplexKind::ce, 1);
  CHECK(h.dimZ == 2);
  CHECK(h.dimB == 2);
  CHECK(h.dimH == 0);
}

TEST_CASE("dimensions agree with an independent rank computation") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const MRBLieDerPair p = random_pair(rng);
    const Representation r = rng.coin() ? adjoint_representation(p) : random_representation(rng, p);
    for (ComplexKind kind : {ComplexKind::ce, ComplexKind::mrbo, ComplexKind::mrbla, ComplexKind::mrbld})
      for (std::size_t n = 1; n <= 2; ++n) {
        const CohomologyResult h = cohomology(r, kind, n);
        const Matrix m = operator_matrix(r, kind, n);
        CHECK(h.dimZ == m.cols() - oracle::rank(m));
        const bool first = n == first_degree(kind);
        CHECK(h.dimB == (first ? 0 : oracle::rank(operator_matrix(r, kind, n - 1))));
        CHECK(h.dimH == h.dimZ - h.dimB);
        CHECK(h.representatives.size() == h.dimH);
        for (const auto& z : h.cocycle_basis) CHECK(is_cocycle(r, kind, n, z).cocycle);
        for (std::size_t k = 0; k < h.coboundary_basis.size(); ++k)
          CHECK(apply_coboundary(r, kind, n - 1, h.coboundary_preimages[k]) == h.coboundary_basis[k]);
        // Coboundaries and representatives together form a basis of Z.
        std::vector<Vector> cols;
        for (const auto& b : h.coboundary_basis) cols.push_back(flatten(b));
        for (const auto& z : h.representatives) cols.push_back(flatten(z));
        if (!cols.empty()) CHECK(oracle::rank(Matrix::from_columns(cols, m.cols())) == h.dimZ);
      }
  }
}

TEST_CASE("operator matrix reproduces the coboundary") {
  Rng rng(42);
  const Representation r = random_representation(rng, random_pair(rng));
  for (ComplexKind kind : {ComplexKind::mrbla, ComplexKind::mrbld})
    for (std::size_t n = 1; n <= 2; ++n) {
      const Vector x = random_vector(rng, space_dim(r, kind, n));
      CHECK(operator_matrix(r, kind, n) * x == flatten(apply_coboundary(r, kind, n, unflatten(r, kind, n, x))));
    }
}

TEST_CASE("coboundary preimages") {
  Rng rng(43);
  const Representation r = adjoint_representation(random_pair(rng));
  const GradedCochain y = unflatten(r, ComplexKind::mrbld, 1, random_vector(rng, space_dim(r, ComplexKind::mrbld, 1)));
  const GradedCochain x = apply_coboundary(r, ComplexKind::mrbld, 1, y);
  const auto pre = coboundary_preimage(r, ComplexKind::mrbld, 2, x);
  REQUIRE(pre.has_value());
  CHECK(apply_coboundary(r, ComplexKind::mrbld, 1, *pre) == x);
  const CohomologyResult h = cohomology(abelian_zero(2), ComplexKind::mrbld, 2);
  CHECK_FALSE(coboundary_preimage(abelian_zero(2), ComplexKind::mrbld, 2, h.representatives.front()).has_value());
}

TEST_CASE("cohomology is invariant under change of basis") {
  Rng rng(44);
  for (int trial = 0; trial < 5; ++trial) {
    const MRBLieDerPair p = random_pair(rng);
    const MRBLieDerPair q = change_basis(p, random_unimodular(rng, p.dim()));
    for (std::size_t n = 1; n <= 2; ++n)
      CHECK(cohomology(adjoint_representation(p), ComplexKind::mrbld, n).dimH ==
            cohomology(adjoint_representation(q), ComplexKind::mrbld, n).dimH);
  }
}
