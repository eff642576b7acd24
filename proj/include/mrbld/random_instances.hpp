#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mrbld/cochain.hpp"
#include "mrbld/pair.hpp"

namespace mrbld {

/// The single seeded source of randomness used by every randomized check.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Entries are integers drawn uniformly from [lo, hi].
Vector random_vector(Rng& rng, std::size_t n, long lo = -5, long hi = 5);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -5, long hi = 5);
Cochain random_cochain(Rng& rng, std::size_t degree, std::size_t source_dim, std::size_t target_dim);
/// Integer matrix of determinant +-1 built from elementary row operations.
Matrix random_unimodular(Rng& rng, std::size_t n);

namespace catalog {
LieAlgebra abelian(std::size_t dim);
/// [e0,e1] = e1.
LieAlgebra r2();
/// [e0,e1] = e2.
LieAlgebra heisenberg();
/// Basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
/// Two commuting copies of r2.
LieAlgebra r2_plus_r2();
/// [e0,e1] = e1, [e0,e2] = 2 e2.
LieAlgebra r3();
/// r2 with a central third basis vector.
LieAlgebra r2_plus_line();
/// r2 over the complex numbers viewed as a real algebra of dimension 4,
/// basis e0, e1, i e0, i e1.
LieAlgebra complex_r2();
/// Multiplication by i on complex_r2.
Matrix complex_structure();

/// Example instance: weight -1, [e0,e1] = e1, R = diag(2,1), d = diag(0,3).
MRBLieDerPair example_pair();
}  // namespace catalog

/// Basis of the derivations of `alg` that commute with R.
std::vector<Matrix> derivations_commuting_with(const LieAlgebra& alg, const Matrix& R);

/// Valid pair drawn from the catalog constructions (scalar operators,
/// splittings into complementary subalgebras, complex structures and
/// arbitrary operators on abelian algebras), followed by an optional
/// unimodular change of basis. Dimension at most 4.
MRBLieDerPair random_pair(Rng& rng);

/// Valid nonabelian pair of weight -c^2 (c = 1 or 2) or c^2, used where a
/// prescribed weight is needed.
MRBLieDerPair random_pair_with_weight(Rng& rng, const Rational& weight);

/// Valid representation of p: adjoint, trivial with commuting R_V and d_V,
/// or their direct sum written in a random basis of V.
Representation random_representation(Rng& rng, const MRBLieDerPair& p);

struct RotaBaxterTriple {
  LieAlgebra algebra;
  Matrix T;
  Matrix d;
  Rational lambda;
};

/// Rota-Baxter operators of weight lambda on r2 with integer entries in
/// [-2, 2], found by exhaustive search.
std::vector<Matrix> rota_baxter_grid(const Rational& lambda);

/// Valid weight-lambda Rota-Baxter LieDer triple: scalar operators,
/// projections onto a subalgebra along a complementary subalgebra, grid
/// solutions on r2, or arbitrary operators on abelian algebras.
RotaBaxterTriple random_rota_baxter(Rng& rng, const Rational& lambda);

}  // namespace mrbld
