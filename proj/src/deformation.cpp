#include "mrbld/deformation.hpp"

#include "mrbld/random_instances.hpp"

namespace mrbld {

DeformationJet DeformationJet::zero(const MRBLieDerPair& base, std::size_t order) {
  const std::size_t n = base.dim();
  return {base, order, std::vector<Cochain>(order, Cochain::zero(2, n, n)), std::vector<Matrix>(order, Matrix(n, n)),
          std::vector<Matrix>(order, Matrix(n, n))};
}

Cochain bracket_cochain(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  Cochain c = Cochain::zero(2, n, n);
  const auto tuples = combinations(n, 2);
  for (std::size_t t = 0; t < tuples.size(); ++t) c.values[t] = alg.bracket_basis(tuples[t][0], tuples[t][1]);
  return c;
}

void check_shapes(const DeformationJet& j) {
  check_shapes(j.base);
  const std::size_t n = j.base.dim();
  if (j.order == 0) throw DimensionMismatch("jet order must be at least 1");
  if (j.mu.size() != j.order || j.R.size() != j.order || j.d.size() != j.order)
    throw DimensionMismatch("jet must list one mu, R and d per order");
  for (std::size_t i = 0; i < j.order; ++i) {
    if (j.mu[i].degree != 2 || j.mu[i].source_dim != n || j.mu[i].target_dim != n)
      throw DimensionMismatch("mu[" + std::to_string(i) + "] must be a degree-2 cochain on the base algebra");
    if (j.R[i].rows() != n || j.R[i].cols() != n) throw DimensionMismatch("R[" + std::to_string(i) + "] has the wrong shape");
    if (j.d[i].rows() != n || j.d[i].cols() != n) throw DimensionMismatch("d[" + std::to_string(i) + "] has the wrong shape");
  }
}

namespace {

// Coefficients of t^k including the base at k = 0 and zero beyond the order.
struct Series {
  std::vector<Cochain> mu;
  std::vector<Matrix> R;
  std::vector<Matrix> d;

  explicit Series(const DeformationJet& j) {
    mu.push_back(bracket_cochain(j.base.algebra));
    R.push_back(j.base.R);
    d.push_back(j.base.d);
    mu.insert(mu.end(), j.mu.begin(), j.mu.end());
    R.insert(R.end(), j.R.begin(), j.R.end());
    d.insert(d.end(), j.d.begin(), j.d.end());
  }
};

Vector apply2(const Cochain& mu, const Vector& x, const Vector& y) { return mu.evaluate({x, y}); }

// Every residual of the t^n equations, zero or not, in a fixed order.
std::vector<Violation> residuals(const DeformationJet& j, std::size_t n) {
  check_shapes(j);
  if (n > j.order) throw DegreeOutOfRange("order " + std::to_string(n) + " exceeds the jet order");
  const Series s(j);
  const std::size_t dim = j.base.dim();
  auto e = [dim](std::size_t i) { return unit_vector(dim, i); };
  std::vector<Violation> out;

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k1 = i + 1; k1 < dim; ++k1)
      for (std::size_t k2 = k1 + 1; k2 < dim; ++k2) {
        Vector r(dim);
        const std::size_t idx[3] = {i, k1, k2};
        for (std::size_t a = 0; a <= n; ++a)
          for (std::size_t c = 0; c < 3; ++c) {
            const Vector inner = apply2(s.mu[n - a], e(idx[c]), e(idx[(c + 1) % 3]));
            r = add(r, apply2(s.mu[a], inner, e(idx[(c + 2) % 3])));
          }
        out.push_back({"jacobi", {i, k1, k2}, std::move(r), zero_vector(dim)});
      }

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = i + 1; k < dim; ++k) {
      Vector r = scaled(-j.base.weight, s.mu[n].values[combination_index({i, k}, dim)]);
      for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; a + b <= n; ++b) {
          const std::size_t c = n - a - b;
          r = add(r, apply2(s.mu[a], s.R[b] * e(i), s.R[c] * e(k)));
          r = sub(r, s.R[a] * apply2(s.mu[b], s.R[c] * e(i), e(k)));
          r = sub(r, s.R[a] * apply2(s.mu[b], e(i), s.R[c] * e(k)));
        }
      out.push_back({"modified-rota-baxter", {i, k}, std::move(r), zero_vector(dim)});
    }

  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = i + 1; k < dim; ++k) {
      Vector r(dim);
      for (std::size_t a = 0; a <= n; ++a) {
        const std::size_t b = n - a;
        r = add(r, s.d[a] * apply2(s.mu[b], e(i), e(k)));
        r = sub(r, apply2(s.mu[b], s.d[a] * e(i), e(k)));
        r = sub(r, apply2(s.mu[b], e(i), s.d[a] * e(k)));
      }
      out.push_back({"derivation", {i, k}, std::move(r), zero_vector(dim)});
    }

  Matrix comm(dim, dim);
  for (std::size_t a = 0; a <= n; ++a) comm = comm + s.R[a] * s.d[n - a] - s.d[a] * s.R[n - a];
  for (std::size_t c = 0; c < dim; ++c) out.push_back({"operator-commutation", {c}, comm.column(c), zero_vector(dim)});
  return out;
}

Representation adjoint_of(const MRBLieDerPair& p) { return adjoint_representation(p); }

}  // namespace

ValidationReport check_order(const DeformationJet& j, std::size_t n) {
  ValidationReport report;
  for (auto& v : residuals(j, n))
    if (!is_zero(v.lhs)) report.violations.push_back(std::move(v));
  return report;
}

Infinitesimal infinitesimal(const DeformationJet& j, PhiConvention convention) {
  const ValidationReport report = check_order(j, 1);
  if (!report.ok()) throw OrderOneFails("the order-1 deformation equations fail", report);
  const std::size_t n = j.base.dim();
  Infinitesimal out;
  out.quad = {2, j.mu[0], Cochain::from_matrix(j.R[0]), Cochain::from_matrix(j.d[0]), Cochain::zero(0, n, n)};
  out.verdict = is_cocycle(adjoint_of(j.base), ComplexKind::mrbld, 2, to_slots(out.quad), convention);
  return out;
}

DeformationJet apply_equivalence(const DeformationJet& j, const EquivalenceJet& e) {
  check_shapes(j);
  const std::size_t N = j.order, n = j.base.dim();
  std::vector<Matrix> psi{Matrix::identity(n)};
  for (std::size_t k = 1; k <= N; ++k) {
    Matrix m = k <= e.order() ? e.psi[k - 1] : Matrix(n, n);
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("psi has the wrong shape");
    psi.push_back(std::move(m));
  }
  // Truncated inverse series: chi_0 = Id, chi_k = -sum_{i=1..k} psi_i chi_{k-i}.
  std::vector<Matrix> chi{Matrix::identity(n)};
  for (std::size_t k = 1; k <= N; ++k) {
    Matrix m(n, n);
    for (std::size_t i = 1; i <= k; ++i) m = m - psi[i] * chi[k - i];
    chi.push_back(std::move(m));
  }
  const Series s(j);
  DeformationJet out = DeformationJet::zero(j.base, N);
  const auto tuples = combinations(n, 2);
  for (std::size_t k = 1; k <= N; ++k) {
    Matrix R(n, n), d(n, n);
    for (std::size_t a = 0; a <= k; ++a)
      for (std::size_t b = 0; a + b <= k; ++b) {
        R = R + chi[a] * s.R[b] * psi[k - a - b];
        d = d + chi[a] * s.d[b] * psi[k - a - b];
      }
    out.R[k - 1] = std::move(R);
    out.d[k - 1] = std::move(d);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      const Vector x = unit_vector(n, tuples[t][0]), y = unit_vector(n, tuples[t][1]);
      Vector value(n);
      for (std::size_t a = 0; a <= k; ++a)
        for (std::size_t b = 0; a + b <= k; ++b)
          for (std::size_t c = 0; a + b + c <= k; ++c)
            value = add(value, chi[a] * apply2(s.mu[b], psi[c] * x, psi[k - a - b - c] * y));
      out.mu[k - 1].values[t] = std::move(value);
    }
  }
  return out;
}

EquivalenceJet compose(const EquivalenceJet& e1, const EquivalenceJet& e2, std::size_t order) {
  auto term = [](const EquivalenceJet& e, std::size_t k, std::size_t n) {
    if (k == 0) return Matrix::identity(n);
    return k <= e.order() ? e.psi[k - 1] : Matrix(n, n);
  };
  std::size_t n = 0;
  if (!e1.psi.empty()) n = e1.psi[0].rows();
  else if (!e2.psi.empty()) n = e2.psi[0].rows();
  EquivalenceJet out;
  for (std::size_t k = 1; k <= order; ++k) {
    Matrix m(n, n);
    for (std::size_t a = 0; a <= k; ++a) m = m + term(e1, a, n) * term(e2, k - a, n);
    out.psi.push_back(std::move(m));
  }
  return out;
}

bool infinitesimals_cohomologous(const DeformationJet& j1, const DeformationJet& j2, const EquivalenceJet& e,
                                 PhiConvention convention) {
  if (!(j1.base == j2.base)) throw DimensionMismatch("jets deform different pairs");
  const Infinitesimal i1 = infinitesimal(j1, convention), i2 = infinitesimal(j2, convention);
  const std::size_t n = j1.base.dim();
  const Matrix psi1 = e.order() >= 1 ? e.psi[0] : Matrix(n, n);
  const QuadCochain shift = D_mrbld(adjoint_of(j1.base), {1, Cochain::from_matrix(psi1), {}, {}, {}}, convention);
  return to_slots(i2.quad) - to_slots(i1.quad) == to_slots(shift);
}

RigidityReport rigidity_report(const MRBLieDerPair& p, PhiConvention convention) {
  const CohomologyResult h = cohomology(adjoint_of(p), ComplexKind::mrbld, 2, convention);
  RigidityReport out;
  out.dimH2 = h.dimH;
  out.rigid_by_criterion = h.dimH == 0;
  for (const auto& rep : h.representatives) out.candidates.push_back(quad_from_slots(rep));
  return out;
}

DeformationJet order1_jet_from_coords(const MRBLieDerPair& p, const Vector& coords) {
  const std::size_t n = p.dim(), mu_len = binomial(n, 2) * n;
  if (coords.size() != mu_len + 2 * n * n) throw DimensionMismatch("order-1 coordinates have the wrong length");
  DeformationJet j = DeformationJet::zero(p, 1);
  j.mu[0] = Cochain::unflatten(2, n, n, Vector(coords.begin(), coords.begin() + mu_len));
  j.R[0] = Cochain::unflatten(1, n, n, Vector(coords.begin() + mu_len, coords.begin() + mu_len + n * n)).to_matrix();
  j.d[0] = Cochain::unflatten(1, n, n, Vector(coords.begin() + mu_len + n * n, coords.end())).to_matrix();
  return j;
}

Matrix order1_system(const MRBLieDerPair& p) {
  const ValidationReport base = validate_pair(p);
  if (!base.ok()) throw InvalidPair("deformations need a valid base pair", base);
  const std::size_t n = p.dim(), unknowns = binomial(n, 2) * n + 2 * n * n;
  std::vector<Vector> columns;
  for (std::size_t u = 0; u < unknowns; ++u) {
    Vector x(unknowns);
    x[u] = 1;
    Vector col;
    for (const auto& v : residuals(order1_jet_from_coords(p, x), 1)) col.insert(col.end(), v.lhs.begin(), v.lhs.end());
    columns.push_back(std::move(col));
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  return Matrix::from_columns(columns, rows);
}

DeformationJet sample_order1_jet(Rng& rng, const MRBLieDerPair& p) {
  const Matrix system = order1_system(p);
  Vector x(system.cols());
  for (const auto& b : nullspace_basis(system)) axpy(x, rng.uniform(-3, 3), b);
  return order1_jet_from_coords(p, x);
}

}  // namespace mrbld
