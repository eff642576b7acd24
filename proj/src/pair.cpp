#include "mrbld/pair.hpp"

#include <string>

namespace mrbld {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

void check_square(const Matrix& m, std::size_t n, const std::string& name) {
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatch(name + " must be " + idx(n) + "x" + idx(n) + ", got " + idx(m.rows()) + "x" + idx(m.cols()));
}

// Compares the columns of two matrices that should be equal and records one
// violation per differing column, tagged with `prefix` + column index.
void compare_columns(ValidationReport& report, const std::string& identity, std::vector<std::size_t> prefix,
                     const Matrix& lhs, const Matrix& rhs) {
  for (std::size_t c = 0; c < lhs.cols(); ++c) {
    Vector l = lhs.column(c), r = rhs.column(c);
    if (l != r) {
      auto indices = prefix;
      indices.push_back(c);
      report.violations.push_back({identity, std::move(indices), std::move(l), std::move(r)});
    }
  }
}

}  // namespace

Matrix Representation::action(const Vector& a) const {
  if (a.size() != rho.size()) throw DimensionMismatch("action: argument length mismatch");
  Matrix m(dimV, dimV);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) m = m + a[i] * rho[i];
  return m;
}

void check_shapes(const MRBLieDerPair& p) {
  check_square(p.R, p.dim(), "R");
  check_square(p.d, p.dim(), "d");
}

void check_shapes(const Representation& r) {
  check_shapes(r.pair);
  if (r.rho.size() != r.pair.dim())
    throw DimensionMismatch("rho must have one matrix per basis element (" + idx(r.pair.dim()) + "), got " + idx(r.rho.size()));
  for (std::size_t i = 0; i < r.rho.size(); ++i) check_square(r.rho[i], r.dimV, "rho[" + idx(i) + "]");
  check_square(r.RV, r.dimV, "RV");
  check_square(r.dV, r.dimV, "dV");
}

ValidationReport validate_pair(const MRBLieDerPair& p) {
  check_shapes(p);
  ValidationReport report = validate_lie(p.algebra);
  const LieAlgebra& alg = p.algebra;
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector a = unit_vector(n, i), b = unit_vector(n, j);
      const Vector Ra = p.R * a, Rb = p.R * b;
      const Vector lhs = alg.bracket(Ra, Rb);
      Vector rhs = p.R * add(alg.bracket(Ra, b), alg.bracket(a, Rb));
      axpy(rhs, p.weight, alg.bracket(a, b));
      if (lhs != rhs) report.violations.push_back({"modified-rota-baxter", {i, j}, lhs, rhs});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector a = unit_vector(n, i), b = unit_vector(n, j);
      const Vector lhs = p.d * alg.bracket(a, b);
      const Vector rhs = add(alg.bracket(p.d * a, b), alg.bracket(a, p.d * b));
      if (lhs != rhs) report.violations.push_back({"derivation", {i, j}, lhs, rhs});
    }
  compare_columns(report, "operator-commutation", {}, p.R * p.d, p.d * p.R);
  return report;
}

ValidationReport validate_representation(const Representation& r) {
  check_shapes(r);
  const ValidationReport pair_report = validate_pair(r.pair);
  if (!pair_report.ok()) throw InvalidPair("representation over an invalid pair", pair_report);

  ValidationReport report;
  const auto& p = r.pair;
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix lhs = r.action(p.algebra.bracket_basis(i, j));
      const Matrix rhs = r.rho[i] * r.rho[j] - r.rho[j] * r.rho[i];
      compare_columns(report, "action-homomorphism", {i, j}, lhs, rhs);
    }
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix rho_Ra = r.action(p.R * unit_vector(n, i));
    const Matrix lhs = rho_Ra * r.RV;
    const Matrix rhs = r.RV * (rho_Ra + r.rho[i] * r.RV) + p.weight * r.rho[i];
    compare_columns(report, "action-operator", {i}, lhs, rhs);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix lhs = r.dV * r.rho[i];
    const Matrix rhs = r.action(p.d * unit_vector(n, i)) + r.rho[i] * r.dV;
    compare_columns(report, "action-derivation", {i}, lhs, rhs);
  }
  compare_columns(report, "module-operator-commutation", {}, r.RV * r.dV, r.dV * r.RV);
  return report;
}

ValidationReport validate_morphism(const PairMorphism& m) {
  for (const auto* p : {&m.source, &m.target}) {
    const ValidationReport rep = validate_pair(*p);
    if (!rep.ok()) throw InvalidPair("morphism endpoint is not a valid pair", rep);
  }
  if (m.map.rows() != m.target.dim() || m.map.cols() != m.source.dim())
    throw DimensionMismatch("morphism map must be target.dim x source.dim");
  ValidationReport report;
  const std::size_t n = m.source.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = m.map * m.source.algebra.bracket_basis(i, j);
      const Vector rhs = m.target.algebra.bracket(m.map.column(i), m.map.column(j));
      if (lhs != rhs) report.violations.push_back({"bracket-preservation", {i, j}, lhs, rhs});
    }
  compare_columns(report, "derivation-intertwining", {}, m.map * m.source.d, m.target.d * m.map);
  compare_columns(report, "operator-intertwining", {}, m.map * m.source.R, m.target.R * m.map);
  return report;
}

Representation adjoint_representation(const MRBLieDerPair& p) {
  Representation r{p, p.dim(), {}, p.R, p.d};
  for (std::size_t i = 0; i < p.dim(); ++i) r.rho.push_back(p.algebra.ad(i));
  return r;
}

Representation trivial_representation(const MRBLieDerPair& p, const Matrix& RV, const Matrix& dV) {
  Representation r{p, RV.rows(), std::vector<Matrix>(p.dim(), Matrix(RV.rows(), RV.rows())), RV, dV};
  check_shapes(r);
  return r;
}

ValidationReport validate_rota_baxter(const LieAlgebra& alg, const Matrix& T, const Matrix& d, const Rational& lambda) {
  check_square(T, alg.dim(), "T");
  check_square(d, alg.dim(), "d");
  ValidationReport report = validate_lie(alg);
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector a = unit_vector(n, i), b = unit_vector(n, j);
      const Vector Ta = T * a, Tb = T * b;
      const Vector lhs = alg.bracket(Ta, Tb);
      Vector inner = add(alg.bracket(Ta, b), alg.bracket(a, Tb));
      axpy(inner, lambda, alg.bracket(a, b));
      const Vector rhs = T * inner;
      if (lhs != rhs) report.violations.push_back({"rota-baxter", {i, j}, lhs, rhs});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector a = unit_vector(n, i), b = unit_vector(n, j);
      const Vector lhs = d * alg.bracket(a, b);
      const Vector rhs = add(alg.bracket(d * a, b), alg.bracket(a, d * b));
      if (lhs != rhs) report.violations.push_back({"derivation", {i, j}, lhs, rhs});
    }
  compare_columns(report, "operator-commutation", {}, T * d, d * T);
  return report;
}

MRBLieDerPair from_rota_baxter(const LieAlgebra& alg, const Matrix& T, const Matrix& d, const Rational& lambda) {
  const ValidationReport report = validate_rota_baxter(alg, T, d, lambda);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    std::string where;
    for (std::size_t k = 0; k < v.indices.size(); ++k) where += (k ? "," : "") + idx(v.indices[k]);
    throw NotRotaBaxter("not a Rota-Baxter LieDer triple: " + v.identity + " fails at (" + where + ")", report);
  }
  const std::size_t n = alg.dim();
  return {alg, -(lambda * lambda), Rational(2) * T + lambda * Matrix::identity(n), d};
}

MRBLieDerPair semidirect_product(const Representation& r) {
  const ValidationReport report = validate_representation(r);
  if (!report.ok()) throw InvalidRepresentation("semidirect product needs a valid representation", report);
  const std::size_t n = r.pair.dim(), m = r.dimV, total = n + m;
  LieAlgebra alg(total);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j) {
      Vector value(total);
      if (i < n && j < n) {
        const Vector b = r.pair.algebra.bracket_basis(i, j);
        for (std::size_t k = 0; k < n; ++k) value[k] = b[k];
      } else if (i < n) {
        // [e_i, v_j] = rho(e_i) v_j
        for (std::size_t k = 0; k < m; ++k) value[n + k] = r.rho[i](k, j - n);
      }
      if (!is_zero(value)) alg.set_bracket(i, j, value);
    }
  return {alg, r.pair.weight, direct_sum(r.pair.R, r.RV), direct_sum(r.pair.d, r.dV)};
}

MRBLieDerPair induced_pair(const MRBLieDerPair& p) {
  const ValidationReport report = validate_pair(p);
  if (!report.ok()) throw InvalidPair("induced pair needs a valid pair", report);
  const std::size_t n = p.dim();
  LieAlgebra alg(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector a = unit_vector(n, i), b = unit_vector(n, j);
      const Vector value = add(p.algebra.bracket(p.R * a, b), p.algebra.bracket(a, p.R * b));
      if (!is_zero(value)) alg.set_bracket(i, j, value);
    }
  return {alg, p.weight, p.R, p.d};
}

Representation induced_representation(const Representation& r) {
  const ValidationReport report = validate_representation(r);
  if (!report.ok()) throw InvalidRepresentation("induced representation needs a valid representation", report);
  Representation out{induced_pair(r.pair), r.dimV, {}, r.RV, r.dV};
  const std::size_t n = r.pair.dim();
  for (std::size_t i = 0; i < n; ++i)
    out.rho.push_back(r.action(r.pair.R * unit_vector(n, i)) - r.RV * r.rho[i]);
  return out;
}

MRBLieDerPair change_basis(const MRBLieDerPair& p, const Matrix& g) {
  const Matrix g_inv = inverse(g);
  return {p.algebra.change_basis(g), p.weight, g_inv * p.R * g, g_inv * p.d * g};
}

Representation change_basis(const Representation& r, const Matrix& g, const Matrix& h) {
  const Matrix h_inv = inverse(h);
  Representation out{change_basis(r.pair, g), r.dimV, {}, h_inv * r.RV * h, h_inv * r.dV * h};
  for (std::size_t i = 0; i < r.pair.dim(); ++i) out.rho.push_back(h_inv * r.action(g.column(i)) * h);
  return out;
}

std::optional<Rational> fit_weight(const LieAlgebra& alg, const Matrix& R) {
  const std::size_t n = alg.dim();
  std::optional<Rational> weight;
  std::vector<std::pair<Vector, Vector>> residuals;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector a = unit_vector(n, i), b = unit_vector(n, j);
      const Vector Ra = R * a, Rb = R * b;
      Vector res = sub(alg.bracket(Ra, Rb), R * add(alg.bracket(Ra, b), alg.bracket(a, Rb)));
      Vector br = alg.bracket(a, b);
      if (!weight)
        for (std::size_t k = 0; k < n; ++k)
          if (!br[k].is_zero()) {
            weight = res[k] / br[k];
            break;
          }
      residuals.emplace_back(std::move(res), std::move(br));
    }
  if (!weight) return std::nullopt;
  for (const auto& [res, br] : residuals)
    if (res != scaled(*weight, br)) return std::nullopt;
  return weight;
}

namespace {

bool rep_validates(const Representation& r, ValidationReport* pair_report, ValidationReport* rep_report) {
  ValidationReport pr = validate_pair(r.pair);
  if (pair_report) *pair_report = pr;
  if (!pr.ok()) return false;
  ValidationReport rr = validate_representation(r);
  if (rep_report) *rep_report = rr;
  return rr.ok();
}

}  // namespace

TransformVerdict transform_representation(const Representation& r, TransformMode mode, const Rational& kappa) {
  const ValidationReport base = validate_representation(r);
  if (!base.ok()) throw InvalidRepresentation("transform needs a valid representation", base);
  const std::size_t n = r.pair.dim(), m = r.dimV;
  const Rational& w = r.pair.weight;

  TransformVerdict verdict;
  verdict.mode = mode;
  Representation claimed = r;
  if (mode == TransformMode::scale) {
    claimed.pair.R = kappa * r.pair.R;
    claimed.RV = kappa * r.RV;
    claimed.pair.weight = kappa * w;
  } else {
    claimed.pair.R = (-w) * Matrix::identity(n) - r.pair.R;
    claimed.RV = (-w) * Matrix::identity(m) - r.RV;
  }
  verdict.claimed = claimed;
  verdict.claimed_valid = rep_validates(claimed, &verdict.claimed_pair_report, &verdict.claimed_rep_report);

  std::optional<Rational> alt_weight;
  if (mode == TransformMode::scale)
    alt_weight = kappa * kappa * w;
  else
    alt_weight = fit_weight(r.pair.algebra, claimed.pair.R);
  if (alt_weight) {
    Representation alt = claimed;
    alt.pair.weight = *alt_weight;
    verdict.alternative_valid = rep_validates(alt, nullptr, nullptr);
    verdict.alternative = std::move(alt);
  }
  return verdict;
}

}  // namespace mrbld
