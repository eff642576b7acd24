#include "mrbld/phi_calibration.hpp"

#include "mrbld/random_instances.hpp"

namespace mrbld {

namespace {

// Column u of the system is the residual of the identity under the table
// whose only nonzero coefficient is unknown u.
PhiTable unit_table(std::size_t max_subset, std::size_t u) {
  PhiTable t{std::vector<Rational>(max_subset + 1), std::vector<Rational>(max_subset + 1)};
  if (u <= max_subset)
    t.plain[u] = 1;
  else
    t.composed[u - max_subset - 1] = 1;
  return t;
}

std::optional<Vector> solve_normalized(const std::vector<Vector>& rows, const std::vector<std::size_t>& unknowns,
                                       std::size_t total_unknowns, bool& unique) {
  // Restrict to the given unknowns and add the row plain[0] = 1.
  std::vector<Vector> restricted;
  Vector rhs;
  for (const auto& row : rows) {
    Vector r;
    for (auto u : unknowns) r.push_back(row[u]);
    restricted.push_back(std::move(r));
    rhs.push_back(0);
  }
  Vector norm(unknowns.size());
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    if (unknowns[k] == 0) norm[k] = 1;
  restricted.push_back(norm);
  rhs.push_back(1);
  const Matrix m = Matrix::from_rows(restricted, unknowns.size());
  auto x = solve(m, rhs);
  unique = x && rank(m) == unknowns.size();
  if (!x) return std::nullopt;
  Vector full(total_unknowns);
  for (std::size_t k = 0; k < unknowns.size(); ++k) full[unknowns[k]] = (*x)[k];
  return full;
}

}  // namespace

PhiCalibration calibrate_phi(const std::vector<Representation>& instances, std::size_t max_degree,
                             std::uint64_t seed, std::size_t cochains_per_degree) {
  if (instances.empty()) throw Underdetermined("calibration needs at least one instance");
  if (max_degree == 0) throw DegreeOutOfRange("calibration needs max_degree >= 1");
  PhiCalibration out;
  out.weight = instances.front().pair.weight;
  out.max_subset = max_degree;
  out.seed = seed;
  out.instances = instances.size();

  const std::size_t N = max_degree, unknowns = 2 * (N + 1);
  Rng rng(seed);
  std::vector<Vector> rows;
  for (const auto& r : instances) {
    if (r.pair.weight != out.weight) throw DimensionMismatch("calibration instances must share one weight");
    for (std::size_t n = 0; n < N; ++n)
      for (std::size_t k = 0; k < cochains_per_degree; ++k) {
        const Cochain f = random_cochain(rng, n, r.pair.dim(), r.dimV);
        const Cochain df = delta_ce(r, f);
        std::vector<Vector> columns;
        for (std::size_t u = 0; u < unknowns; ++u) {
          const PhiTable t = unit_table(N, u);
          columns.push_back((phi(r, df, t) - delta_mrbo(r, phi(r, f, t))).flatten());
        }
        for (std::size_t i = 0; i < columns.front().size(); ++i) {
          Vector row(unknowns);
          for (std::size_t u = 0; u < unknowns; ++u) row[u] = columns[u][i];
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
      }
  }
  out.equations = rows.size();

  auto satisfies = [&](const PhiTable& t) {
    Vector x(t.plain);
    x.insert(x.end(), t.composed.begin(), t.composed.end());
    for (const auto& row : rows) {
      Rational s;
      for (std::size_t u = 0; u < unknowns; ++u) s += row[u] * x[u];
      if (!s.is_zero()) return false;
    }
    return true;
  };
  out.verbatim_certified = satisfies(phi_table(PhiConvention::verbatim, out.weight, N));

  // phi^0 = Id fixes plain[0] = 1 and composed[0] = 0 in every shape.
  std::vector<std::size_t> verbatim_shape{0}, parity_shape{0}, full_shape{0};
  for (std::size_t r = 1; r <= N; ++r) {
    verbatim_shape.push_back(N + 1 + r);
    parity_shape.push_back(r % 2 == 1 ? N + 1 + r : r);
    full_shape.push_back(r);
    full_shape.push_back(N + 1 + r);
  }
  bool unique = false;
  out.verbatim_shape_solvable = solve_normalized(rows, verbatim_shape, unknowns, unique).has_value();
  if (solve_normalized(rows, full_shape, unknowns, unique)) {
    std::vector<Vector> restricted;
    for (const auto& row : rows) {
      Vector r;
      for (auto u : full_shape) r.push_back(row[u]);
      restricted.push_back(std::move(r));
    }
    out.full_solution_dim = full_shape.size() - rank(Matrix::from_rows(restricted, full_shape.size()));
  }
  const auto x = solve_normalized(rows, parity_shape, unknowns, unique);
  if (x) {
    if (!unique) throw Underdetermined("phi coefficients are not pinned by the sampled instances");
    out.table = PhiTable{Vector(x->begin(), x->begin() + N + 1), Vector(x->begin() + N + 1, x->end())};
  }
  return out;
}

PhiCalibration calibrate_phi(const Rational& weight, std::size_t max_degree, std::uint64_t seed,
                             std::size_t instance_count) {
  Rng rng(seed);
  std::vector<Representation> instances;
  for (std::size_t i = 0; i < instance_count; ++i) {
    const MRBLieDerPair p = random_pair_with_weight(rng, weight);
    instances.push_back(i % 2 == 0 ? adjoint_representation(p) : random_representation(rng, p));
  }
  return calibrate_phi(instances, max_degree, rng.next(), 2);
}

}  // namespace mrbld
