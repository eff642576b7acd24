#include <doctest.h>

#include "mrbld/extension.hpp"
#include "mrbld/random_instances.hpp"

using namespace mrbld;

namespace {

CocycleTriple D1(const Representation& tr, const Matrix& h) {
  const QuadCochain q = D_mrbld(tr, QuadCochain{1, Cochain::from_matrix(h), {}, {}, {}});
  return {q.f, q.g, q.h};
}

}  // namespace

TEST_CASE("zero triple gives the direct sum") {
  const MRBLieDerPair p = catalog::example_pair();
  const VData v{1, Matrix::from_rows({{1}}, 1), Matrix(1, 1), LieAlgebra(1)};
  const ExtensionPresentation x = build_extension(p, v, CocycleTriple::zero(2, 1));
  CHECK(x.total.algebra.bracket_basis(0, 1) == Vector{0, 1, 0});
  CHECK(x.total.R == direct_sum(p.R, v.RV));
  CHECK(x.total.d == direct_sum(p.d, v.dV));
  CHECK(validate_extension(x).ok());
}

TEST_CASE("cocycles build extensions and non-cocycles do not") {
  Rng rng(61);
  std::size_t cocycles = 0, non_cocycles = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const MRBLieDerPair p = random_pair(rng);
    const VData v = random_kernel(rng);
    const Representation tr = trivial_coefficients(p, v);
    const CocycleTriple c = random_cocycle_triple(rng, p, v);
    CHECK(is_cocycle(tr, ComplexKind::mrbld, 2, c.slots()).cocycle);
    const ExtensionPresentation x = build_extension(p, v, c);
    CHECK(validate_extension(x).ok());
    CHECK(extract_cocycle(x) == c);
    ++cocycles;

    const CocycleTriple t = random_triple(rng, p.dim(), v.dimV);
    const bool cocycle = is_cocycle(tr, ComplexKind::mrbld, 2, t.slots()).cocycle;
    CHECK(validate_extension(force_build(p, v, t)).ok() == cocycle);
    if (!cocycle) {
      ++non_cocycles;
      CHECK_THROWS_AS(build_extension(p, v, t), NotCocycle);
    }
  }
  CHECK(cocycles == 25);
  CHECK(non_cocycles > 0);
}

TEST_CASE("the cocycle defect names the failing component") {
  const MRBLieDerPair p = catalog::example_pair();
  const VData v{1, Matrix(1, 1), Matrix(1, 1), LieAlgebra(1)};
  CocycleTriple t = CocycleTriple::zero(2, 1);
  t.chi.values[0] = {1};  // chi(e0) = u only breaks R d = d R on the total space
  try {
    build_extension(p, v, t);
    FAIL("expected NotCocycle");
  } catch (const NotCocycle& e) {
    REQUIRE(e.defect.size() == 4);
    CHECK(e.defect[0].is_zero());
    CHECK(e.defect[1].is_zero());
    CHECK(e.defect[2].is_zero());
    CHECK_FALSE(e.defect[3].is_zero());
  }
}

TEST_CASE("section changes shift the triple by a coboundary") {
  Rng rng(62);
  for (int trial = 0; trial < 15; ++trial) {
    const MRBLieDerPair p = random_pair(rng);
    const VData v = random_kernel(rng);
    const Representation tr = trivial_coefficients(p, v);
    const CocycleTriple c = random_cocycle_triple(rng, p, v);
    const ExtensionPresentation x = build_extension(p, v, c);
    const Matrix h = random_matrix(rng, v.dimV, p.dim(), -2, 2);
    const ExtensionPresentation y = with_section_shift(x, h);
    CHECK(validate_extension(y).ok());
    const CocycleTriple shifted = extract_cocycle(y);
    CHECK(shifted == c + D1(tr, h));
    CHECK(is_cocycle(tr, ComplexKind::mrbld, 2, shifted.slots()).cocycle);
  }
}

TEST_CASE("classification") {
  Rng rng(63);
  for (int trial = 0; trial < 15; ++trial) {
    const MRBLieDerPair p = random_pair(rng);
    const VData v = random_kernel(rng);
    const Representation tr = trivial_coefficients(p, v);
    const CocycleTriple a = random_cocycle_triple(rng, p, v);
    const Matrix h = random_matrix(rng, v.dimV, p.dim(), -2, 2);
    const CocycleTriple b = a + D1(tr, h);
    const ClassifyVerdict ab = classify(p, v, b, a);
    REQUIRE(ab.equivalent);
    CHECK(D1(tr, *ab.witness) == b - a);
    CHECK(ab.morphism_report.ok());
    CHECK(classify(p, v, a, a).equivalent);
    CHECK(classify(p, v, a, b).equivalent);
    const CocycleTriple c = b + D1(tr, random_matrix(rng, v.dimV, p.dim(), -2, 2));
    CHECK(classify(p, v, a, c).equivalent);
  }
  const MRBLieDerPair ab{LieAlgebra(2), 0, Matrix(2, 2), Matrix(2, 2)};
  const VData v{2, Matrix(2, 2), Matrix(2, 2), LieAlgebra(2)};
  const auto basis = cocycle_triple_basis(ab, v);
  CHECK(basis.size() == 10);
  for (const auto& t : basis) {
    const ClassifyVerdict verdict = classify(ab, v, t, CocycleTriple::zero(2, 2));
    CHECK_FALSE(verdict.equivalent);
    CHECK_FALSE(verdict.witness.has_value());
  }
}

TEST_CASE("representation induced by a section") {
  Rng rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    const Representation r = random_representation(rng, random_pair(rng));
    const std::size_t n = r.pair.dim();
    // The semidirect product is an extension whose canonical section recovers rho.
    const ExtensionPresentation x{r.pair, VData{r.dimV, r.RV, r.dV, LieAlgebra(r.dimV)}, semidirect_product(r),
                                  canonical_section(n, r.dimV)};
    REQUIRE(validate_extension(x).ok());
    const InducedRepresentation ind = induced_rep_from_section(x);
    CHECK(ind.representation.rho == r.rho);
    CHECK(ind.report.ok());
    CHECK(extract_cocycle(x) == CocycleTriple::zero(n, r.dimV));
  }
}

TEST_CASE("invalid presentations and kernels are rejected") {
  const MRBLieDerPair p = catalog::example_pair();
  LieAlgebra nonabelian = catalog::r2();
  CHECK_THROWS_AS(trivial_coefficients(p, VData{2, Matrix(2, 2), Matrix(2, 2), nonabelian}), InvalidExtension);
  const Matrix RV = Matrix::from_rows({{0, 1}, {0, 0}}, 2), dV = Matrix::from_rows({{1, 0}, {0, 0}}, 2);
  CHECK_THROWS_AS(trivial_coefficients(p, VData{2, RV, dV, LieAlgebra(2)}), InvalidRepresentation);
  const VData v{1, Matrix(1, 1), Matrix(1, 1), LieAlgebra(1)};
  ExtensionPresentation x = build_extension(p, v, CocycleTriple::zero(2, 1));
  x.section(0, 0) = 2;
  CHECK(validate_extension(x).violates("section"));
  CHECK_THROWS_AS(extract_cocycle(x), InvalidExtension);
  CHECK_THROWS_AS(force_build(p, v, CocycleTriple::zero(3, 1)), DimensionMismatch);
}
