#include "mrbld/random_instances.hpp"

namespace mrbld {

long Rng::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Vector random_vector(Rng& rng, std::size_t n, long lo, long hi) {
  Vector v(n);
  for (auto& x : v) x = rng.uniform(lo, hi);
  return v;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
  return m;
}

Cochain random_cochain(Rng& rng, std::size_t degree, std::size_t source_dim, std::size_t target_dim) {
  Cochain c = Cochain::zero(degree, source_dim, target_dim);
  for (auto& v : c.values) v = random_vector(rng, target_dim);
  return c;
}

Matrix random_unimodular(Rng& rng, std::size_t n) {
  Matrix g = Matrix::identity(n);
  if (n < 2) return g;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const Rational k = rng.coin() ? 1 : -1;
    for (std::size_t c = 0; c < n; ++c) g(i, c) += k * g(j, c);
  }
  return g;
}

namespace catalog {

namespace {

Vector e(std::size_t n, std::size_t i, const Rational& s = 1) { return scaled(s, unit_vector(n, i)); }

}  // namespace

LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

LieAlgebra r2() {
  LieAlgebra a(2);
  a.set_bracket(0, 1, e(2, 1));
  return a;
}

LieAlgebra heisenberg() {
  LieAlgebra a(3);
  a.set_bracket(0, 1, e(3, 2));
  return a;
}

LieAlgebra sl2() {
  LieAlgebra a(3);
  a.set_bracket(0, 1, e(3, 1, 2));
  a.set_bracket(0, 2, e(3, 2, -2));
  a.set_bracket(1, 2, e(3, 0));
  return a;
}

LieAlgebra r2_plus_r2() {
  LieAlgebra a(4);
  a.set_bracket(0, 1, e(4, 1));
  a.set_bracket(2, 3, e(4, 3));
  return a;
}

LieAlgebra r3() {
  LieAlgebra a(3);
  a.set_bracket(0, 1, e(3, 1));
  a.set_bracket(0, 2, e(3, 2, 2));
  return a;
}

LieAlgebra r2_plus_line() {
  LieAlgebra a(3);
  a.set_bracket(0, 1, e(3, 1));
  return a;
}

LieAlgebra complex_r2() {
  LieAlgebra a(4);
  a.set_bracket(0, 1, e(4, 1));
  a.set_bracket(0, 3, e(4, 3));
  a.set_bracket(1, 2, e(4, 3, -1));
  a.set_bracket(2, 3, e(4, 1, -1));
  return a;
}

Matrix complex_structure() { return Matrix::from_columns({e(4, 2), e(4, 3), e(4, 0, -1), e(4, 1, -1)}, 4); }

MRBLieDerPair example_pair() { return {r2(), -1, Matrix::diagonal({2, 1}), Matrix::diagonal({0, 3})}; }

}  // namespace catalog

std::vector<Matrix> derivations_commuting_with(const LieAlgebra& alg, const Matrix& R) {
  const std::size_t n = alg.dim();
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(n * n);
        for (std::size_t l = 0; l < n; ++l) {
          row[var(k, l)] += alg.constant(i, j, l);
          row[var(l, i)] -= alg.constant(l, j, k);
          row[var(l, j)] -= alg.constant(i, l, k);
        }
        rows.push_back(std::move(row));
      }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n; ++c) {
      Vector row(n * n);
      for (std::size_t l = 0; l < n; ++l) {
        row[var(l, c)] += R(k, l);
        row[var(k, l)] -= R(l, c);
      }
      rows.push_back(std::move(row));
    }
  std::vector<Matrix> basis;
  for (const auto& x : nullspace_basis(Matrix::from_rows(rows, n * n))) {
    Matrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = x[var(r, c)];
    basis.push_back(std::move(d));
  }
  return basis;
}

namespace {

Matrix random_combination(Rng& rng, const std::vector<Matrix>& basis, std::size_t n) {
  Matrix m(n, n);
  for (const auto& b : basis) m = m + Rational(rng.uniform(-2, 2)) * b;
  return m;
}

Matrix random_commuting_derivation(Rng& rng, const LieAlgebra& alg, const Matrix& R) {
  return random_combination(rng, derivations_commuting_with(alg, R), alg.dim());
}

// A nonabelian algebra with a projection onto a subalgebra along a
// complementary subalgebra.
struct Splitting {
  LieAlgebra algebra;
  Matrix projection;
};

Splitting random_splitting(Rng& rng) {
  switch (rng.uniform(0, 4)) {
    case 0: return {catalog::r2(), Matrix::diagonal({1, 0})};
    case 1: return {catalog::heisenberg(), Matrix::diagonal({1, 0, 0})};
    case 2: return {catalog::sl2(), Matrix::diagonal({1, 1, 0})};
    case 3: return {catalog::r3(), Matrix::diagonal({1, 0, 0})};
    default: return {catalog::r2_plus_r2(), Matrix::diagonal({1, 1, 0, 0})};
  }
}

LieAlgebra random_nonabelian(Rng& rng) {
  switch (rng.uniform(0, 5)) {
    case 0: return catalog::r2();
    case 1: return catalog::heisenberg();
    case 2: return catalog::sl2();
    case 3: return catalog::r3();
    case 4: return catalog::r2_plus_line();
    default: return catalog::r2_plus_r2();
  }
}

MRBLieDerPair maybe_change_basis(Rng& rng, MRBLieDerPair p) {
  if (p.dim() < 2 || !rng.coin()) return p;
  return change_basis(p, random_unimodular(rng, p.dim()));
}

// Weight -c^2 from a scalar operator or from a splitting.
MRBLieDerPair negative_square_pair(Rng& rng, const Rational& c) {
  LieAlgebra alg;
  Matrix R;
  if (rng.coin()) {
    alg = random_nonabelian(rng);
    R = c * Matrix::identity(alg.dim());
  } else {
    Splitting s = random_splitting(rng);
    alg = std::move(s.algebra);
    R = c * (Matrix::identity(alg.dim()) - Rational(2) * s.projection);
  }
  Matrix d = random_commuting_derivation(rng, alg, R);
  return {std::move(alg), -(c * c), std::move(R), std::move(d)};
}

// Weight c^2 from a complex structure.
MRBLieDerPair positive_square_pair(Rng& rng, const Rational& c) {
  LieAlgebra alg = catalog::complex_r2();
  Matrix R = c * catalog::complex_structure();
  Matrix d = random_commuting_derivation(rng, alg, R);
  return {std::move(alg), c * c, std::move(R), std::move(d)};
}

// Weight 0: any operator with central image on the Heisenberg algebra.
MRBLieDerPair zero_weight_pair(Rng& rng) {
  LieAlgebra alg = catalog::heisenberg();
  Matrix R(3, 3);
  for (std::size_t c = 0; c < 3; ++c) R(2, c) = rng.uniform(-2, 2);
  Matrix d = random_commuting_derivation(rng, alg, R);
  return {std::move(alg), 0, std::move(R), std::move(d)};
}

std::optional<Rational> integer_sqrt(const Rational& q) {
  if (!q.is_integer() || q.sign() < 0) return std::nullopt;
  mpz_class root = sqrt(q.raw().get_num());
  if (root * root != q.raw().get_num()) return std::nullopt;
  return Rational(mpq_class(root));
}

}  // namespace

MRBLieDerPair random_pair(Rng& rng) {
  switch (rng.uniform(0, 5)) {
    case 0: {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
      Matrix R = random_matrix(rng, n, n, -2, 2);
      Matrix d = Rational(rng.uniform(-2, 2)) * Matrix::identity(n) + Rational(rng.uniform(-2, 2)) * R;
      return maybe_change_basis(rng, {catalog::abelian(n), rng.uniform(-2, 2), std::move(R), std::move(d)});
    }
    case 1:
    case 2: return maybe_change_basis(rng, negative_square_pair(rng, rng.uniform(1, 2) * (rng.coin() ? 1 : -1)));
    case 3: return maybe_change_basis(rng, positive_square_pair(rng, rng.uniform(1, 2)));
    case 4: return maybe_change_basis(rng, zero_weight_pair(rng));
    default: return maybe_change_basis(rng, catalog::example_pair());
  }
}

MRBLieDerPair random_pair_with_weight(Rng& rng, const Rational& weight) {
  if (weight.is_zero()) return maybe_change_basis(rng, zero_weight_pair(rng));
  if (auto c = integer_sqrt(-weight)) return maybe_change_basis(rng, negative_square_pair(rng, *c));
  if (auto c = integer_sqrt(weight)) return maybe_change_basis(rng, positive_square_pair(rng, *c));
  throw Error("no nonabelian construction for weight " + weight.str());
}

Representation random_representation(Rng& rng, const MRBLieDerPair& p) {
  const std::size_t n = p.dim();
  auto trivial = [&](std::size_t m) {
    Matrix RV = random_matrix(rng, m, m, -2, 2);
    Matrix dV = Rational(rng.uniform(-2, 2)) * Matrix::identity(m) + Rational(rng.uniform(-2, 2)) * RV;
    return trivial_representation(p, RV, dV);
  };
  switch (rng.uniform(0, 2)) {
    case 0: return adjoint_representation(p);
    case 1: return trivial(static_cast<std::size_t>(rng.uniform(1, 2)));
    default: {
      const Representation ad = adjoint_representation(p);
      const Representation tr = trivial(1);
      Representation sum{p, n + 1, {}, direct_sum(ad.RV, tr.RV), direct_sum(ad.dV, tr.dV)};
      for (std::size_t i = 0; i < n; ++i) sum.rho.push_back(direct_sum(ad.rho[i], tr.rho[i]));
      return change_basis(sum, Matrix::identity(n), random_unimodular(rng, n + 1));
    }
  }
}

std::vector<Matrix> rota_baxter_grid(const Rational& lambda) {
  const LieAlgebra alg = catalog::r2();
  const Matrix zero(2, 2);
  std::vector<Matrix> found;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long d = -2; d <= 2; ++d) {
          Matrix T = Matrix::from_rows({{a, b}, {c, d}}, 2);
          if (validate_rota_baxter(alg, T, zero, lambda).ok()) found.push_back(std::move(T));
        }
  return found;
}

RotaBaxterTriple random_rota_baxter(Rng& rng, const Rational& lambda) {
  RotaBaxterTriple t;
  t.lambda = lambda;
  switch (rng.uniform(0, 4)) {
    case 0:
      t.algebra = random_nonabelian(rng);
      t.T = (-lambda) * Matrix::identity(t.algebra.dim());
      break;
    case 1: {
      Splitting s = random_splitting(rng);
      t.algebra = std::move(s.algebra);
      t.T = (-lambda) * s.projection;
      break;
    }
    case 2: {
      t.algebra = catalog::r2();
      const auto grid = rota_baxter_grid(lambda);
      t.T = grid[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(grid.size()) - 1))];
      break;
    }
    case 3: {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
      t.algebra = catalog::abelian(n);
      t.T = random_matrix(rng, n, n, -2, 2);
      break;
    }
    default:
      t.algebra = random_nonabelian(rng);
      t.T = Matrix(t.algebra.dim(), t.algebra.dim());
  }
  t.d = random_commuting_derivation(rng, t.algebra, t.T);
  if (t.algebra.dim() >= 2 && rng.coin()) {
    const Matrix g = random_unimodular(rng, t.algebra.dim()), g_inv = inverse(g);
    t.algebra = t.algebra.change_basis(g);
    t.T = g_inv * t.T * g;
    t.d = g_inv * t.d * g;
  }
  return t;
}

}  // namespace mrbld
