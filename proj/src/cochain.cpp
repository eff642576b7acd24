#include "mrbld/cochain.hpp"

#include <algorithm>
#include <string_view>
#include <bit>

#include "mrbld/random_instances.hpp"

namespace mrbld {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::size_t combination_index(const std::vector<std::size_t>& tuple, std::size_t n) {
  // Count the tuples that precede `tuple` lexicographically.
  const std::size_t k = tuple.size();
  std::size_t index = 0, prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = (i == 0 ? 0 : prev + 1); v < tuple[i]; ++v) index += binomial(n - v - 1, k - i - 1);
    prev = tuple[i];
  }
  return index;
}

Cochain Cochain::zero(std::size_t degree, std::size_t source_dim, std::size_t target_dim) {
  return {degree, source_dim, target_dim, std::vector<Vector>(binomial(source_dim, degree), Vector(target_dim))};
}

Cochain Cochain::from_matrix(const Matrix& m) {
  Cochain c = zero(1, m.cols(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) c.values[j] = m.column(j);
  return c;
}

Cochain Cochain::from_vector(const Vector& v, std::size_t source_dim) { return {0, source_dim, v.size(), {v}}; }

Cochain Cochain::unflatten(std::size_t degree, std::size_t source_dim, std::size_t target_dim, const Vector& coords) {
  Cochain c = zero(degree, source_dim, target_dim);
  if (coords.size() != c.size()) throw DimensionMismatch("cochain coordinates have the wrong length");
  for (std::size_t t = 0; t < c.values.size(); ++t)
    for (std::size_t k = 0; k < target_dim; ++k) c.values[t][k] = coords[t * target_dim + k];
  return c;
}

Vector Cochain::at(const std::vector<std::size_t>& tuple) const {
  if (tuple.size() != degree) throw DimensionMismatch("cochain evaluated on a tuple of the wrong length");
  std::vector<std::size_t> sorted = tuple;
  bool negate = false;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      negate = !negate;
    }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return Vector(target_dim);
  const Vector& v = values[combination_index(sorted, source_dim)];
  return negate ? scaled(-1, v) : v;
}

Vector Cochain::evaluate(const std::vector<Vector>& args) const {
  if (args.size() != degree) throw DimensionMismatch("cochain evaluated on the wrong number of arguments");
  for (const auto& a : args)
    if (a.size() != source_dim) throw DimensionMismatch("cochain argument has the wrong length");
  if (degree == 0) return values[0];
  // f(a_1..a_n) = sum over increasing T of f(e_T) det[a_j(T_i)].
  Vector out(target_dim);
  const auto tuples = combinations(source_dim, degree);
  Matrix minor(degree, degree);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    if (mrbld::is_zero(values[t])) continue;
    for (std::size_t i = 0; i < degree; ++i)
      for (std::size_t j = 0; j < degree; ++j) minor(i, j) = args[j][tuples[t][i]];
    const Rational det = degree == 1 ? minor(0, 0) : determinant(minor);
    if (!det.is_zero()) axpy(out, det, values[t]);
  }
  return out;
}

Matrix Cochain::to_matrix() const {
  if (degree != 1) throw DimensionMismatch("only degree-1 cochains are matrices");
  return Matrix::from_columns(values, target_dim);
}

Vector Cochain::flatten() const {
  Vector out;
  out.reserve(size());
  for (const auto& v : values) out.insert(out.end(), v.begin(), v.end());
  return out;
}

bool Cochain::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Vector& v) { return mrbld::is_zero(v); });
}

namespace {

void require_same_shape(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree || a.source_dim != b.source_dim || a.target_dim != b.target_dim)
    throw DimensionMismatch("cochains of different shapes");
}

}  // namespace

Cochain& Cochain::operator+=(const Cochain& o) {
  require_same_shape(*this, o);
  for (std::size_t t = 0; t < values.size(); ++t) values[t] = add(values[t], o.values[t]);
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  require_same_shape(*this, o);
  for (std::size_t t = 0; t < values.size(); ++t) values[t] = sub(values[t], o.values[t]);
  return *this;
}

Cochain operator*(const Rational& s, Cochain a) {
  for (auto& v : a.values) v = scaled(s, v);
  return a;
}

Cochain Cochain::operator-() const { return Rational(-1) * *this; }

PhiTable phi_table(PhiConvention convention, const Rational& weight, std::size_t max_subset) {
  PhiTable table{std::vector<Rational>(max_subset + 1), std::vector<Rational>(max_subset + 1)};
  table.plain[0] = 1;
  const Rational minus_w = -weight;
  for (unsigned r = 1; r <= max_subset; ++r) {
    if (r % 2 == 1)
      table.composed[r] = -pow(minus_w, (r - 1) / 2);
    else if (convention == PhiConvention::verbatim)
      table.composed[r] = -pow(minus_w, r / 2 + 1);
    else
      table.plain[r] = pow(minus_w, r / 2);
  }
  return table;
}

namespace {

void require_rep_shape(const Representation& r, const Cochain& f) {
  if (f.source_dim != r.pair.dim())
    throw DimensionMismatch("cochain source dimension does not match the algebra");
  if (f.target_dim != r.dimV) throw DimensionMismatch("cochain target dimension does not match the module");
}

// Coboundary given the action matrix of each basis vector and the bracket of
// each ordered basis pair; both conventions of the operator complexes share it.
Cochain coboundary_from(std::size_t n_A, const std::vector<Matrix>& action,
                        const std::vector<std::vector<Vector>>& bracket, const Cochain& f) {
  const std::size_t n = f.degree, m = f.target_dim;
  Cochain out = Cochain::zero(n + 1, n_A, m);
  const auto tuples = combinations(n_A, n + 1);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto& tu = tuples[t];
    Vector value(m);
    // Positions are 1-based in the sign exponents.
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i) rest.push_back(tu[k]);
      const Vector fv = f.at(rest);
      if (mrbld::is_zero(fv)) continue;
      const Rational sign = ((i + 1 + n) % 2 == 0) ? 1 : -1;
      axpy(value, sign, action[tu[i]] * fv);
    }
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        const Vector& b = bracket[tu[i]][tu[j]];
        if (mrbld::is_zero(b)) continue;
        const Rational sign = ((i + 1 + j + 1 + n + 1) % 2 == 0) ? 1 : -1;
        std::vector<std::size_t> args(1);
        for (std::size_t k = 0; k <= n; ++k)
          if (k != i && k != j) args.push_back(tu[k]);
        for (std::size_t c = 0; c < n_A; ++c) {
          if (b[c].is_zero()) continue;
          args[0] = c;
          axpy(value, sign * b[c], f.at(args));
        }
      }
    out.values[t] = std::move(value);
  }
  return out;
}

std::vector<std::vector<Vector>> bracket_table(const LieAlgebra& alg) {
  std::vector<std::vector<Vector>> table(alg.dim(), std::vector<Vector>(alg.dim()));
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) table[i][j] = alg.bracket_basis(i, j);
  return table;
}

}  // namespace

Cochain coboundary(const LieAlgebra& alg, const std::vector<Matrix>& rho, const Cochain& f) {
  if (rho.size() != alg.dim()) throw DimensionMismatch("one action matrix per basis vector is required");
  if (f.source_dim != alg.dim())
    throw DimensionMismatch("cochain source dimension does not match the algebra");
  for (const auto& m : rho)
    if (m.rows() != f.target_dim || m.cols() != f.target_dim)
      throw DimensionMismatch("action matrices do not match the cochain target");
  return coboundary_from(alg.dim(), rho, bracket_table(alg), f);
}

Cochain delta_ce(const Representation& r, const Cochain& f) {
  require_rep_shape(r, f);
  return coboundary(r.pair.algebra, r.rho, f);
}

Cochain delta_mrbo(const Representation& r, const Cochain& f) {
  require_rep_shape(r, f);
  const auto& p = r.pair;
  const std::size_t n_A = p.dim();
  std::vector<Matrix> action;
  std::vector<Vector> Re(n_A);
  for (std::size_t i = 0; i < n_A; ++i) {
    Re[i] = p.R * unit_vector(n_A, i);
    // rho(R a_i) - R_V rho(a_i)
    action.push_back(r.action(Re[i]) - r.RV * r.rho[i]);
  }
  std::vector<std::vector<Vector>> bracket(n_A, std::vector<Vector>(n_A));
  for (std::size_t i = 0; i < n_A; ++i)
    for (std::size_t j = 0; j < n_A; ++j)
      bracket[i][j] = add(p.algebra.bracket(Re[i], unit_vector(n_A, j)), p.algebra.bracket(unit_vector(n_A, i), Re[j]));
  return coboundary_from(n_A, action, bracket, f);
}

Cochain phi(const Representation& r, const Cochain& f, const PhiTable& table) {
  require_rep_shape(r, f);
  const std::size_t n = f.degree, n_A = r.pair.dim();
  if (table.plain.size() != table.composed.size() || table.plain.empty() || table.max_subset() < n)
    throw DimensionMismatch("phi table does not cover the cochain degree");
  if (n == 0) return table.plain[0] * f + table.composed[0] * Cochain::from_vector(r.RV * f.values[0], f.source_dim);

  Cochain out = Cochain::zero(n, n_A, r.dimV);
  const auto tuples = combinations(n_A, n);
  std::vector<Vector> args(n);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    Vector value(r.dimV);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      const Rational& plain = table.plain[size];
      const Rational& composed = table.composed[size];
      if (plain.is_zero() && composed.is_zero()) continue;
      // Positions in the mask keep a_i, the others become R a_i.
      for (std::size_t k = 0; k < n; ++k) {
        const Vector e = unit_vector(n_A, tuples[t][k]);
        args[k] = (mask >> k) & 1u ? e : r.pair.R * e;
      }
      const Vector fv = f.evaluate(args);
      if (!plain.is_zero()) axpy(value, plain, fv);
      if (!composed.is_zero()) axpy(value, composed, r.RV * fv);
    }
    out.values[t] = std::move(value);
  }
  return out;
}

Cochain phi(const Representation& r, const Cochain& f, PhiConvention convention) {
  return phi(r, f, phi_table(convention, r.pair.weight, f.degree));
}

Cochain Delta(const Representation& r, const Cochain& f) {
  require_rep_shape(r, f);
  const std::size_t n = f.degree, n_A = r.pair.dim();
  if (n == 0) return Cochain::from_vector(scaled(-1, r.dV * f.values[0]), n_A);
  Cochain out = Cochain::zero(n, n_A, r.dimV);
  const auto tuples = combinations(n_A, n);
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    std::vector<Vector> args(n);
    for (std::size_t k = 0; k < n; ++k) args[k] = unit_vector(n_A, tuples[t][k]);
    Vector value = scaled(-1, r.dV * f.values[t]);
    for (std::size_t k = 0; k < n; ++k) {
      const Vector saved = args[k];
      args[k] = r.pair.d * saved;
      value = add(value, f.evaluate(args));
      args[k] = saved;
    }
    out.values[t] = std::move(value);
  }
  return out;
}

PairCochain partial_mrbla(const Representation& r, const PairCochain& p, PhiConvention convention) {
  if (p.f.degree == 0) throw DegreeOutOfRange("the combined operator complex starts in degree 1");
  if (p.g.degree + 1 != p.f.degree) throw DimensionMismatch("pair cochain slots must have degrees n and n-1");
  return {delta_ce(r, p.f), -delta_mrbo(r, p.g) - phi(r, p.f, convention)};
}

QuadCochain D_mrbld(const Representation& r, const QuadCochain& q, PhiConvention convention) {
  const std::size_t n = q.degree;
  if (n == 0) throw DegreeOutOfRange("the LieDer complex starts in degree 1");
  if (q.f.degree != n) throw DimensionMismatch("f slot must have the quad degree");
  if (n == 1) {
    const std::size_t n_A = r.pair.dim();
    return {2, delta_ce(r, q.f), -phi(r, q.f, convention), -Delta(r, q.f), Cochain::zero(0, n_A, r.dimV)};
  }
  if (q.g.degree != n - 1 || q.h.degree != n - 1 || q.s.degree != n - 2)
    throw DimensionMismatch("quad cochain slots must have degrees n, n-1, n-1, n-2");
  const PairCochain first = partial_mrbla(r, {q.f, q.g}, convention);
  PairCochain second = partial_mrbla(r, {q.h, q.s}, convention);
  const Rational sign = n % 2 == 0 ? 1 : -1;
  second.f += sign * Delta(r, q.f);
  second.g += sign * Delta(r, q.g);
  return {n + 1, first.f, first.g, second.f, second.g};
}

std::vector<IdentityCheck> verify_chain_maps(const Representation& r, std::size_t degree, std::size_t trials,
                                             std::uint64_t seed, PhiConvention convention) {
  Rng rng(seed);
  const std::size_t n_A = r.pair.dim(), m = r.dimV;
  std::vector<IdentityCheck> checks;
  for (const char* name : {"phi-chain-map", "phi-Delta-commute", "ce-Delta-commute", "mrbo-Delta-commute",
                           "mrbla-Delta-commute"}) {
    if (degree == 0 && std::string_view(name) == "mrbla-Delta-commute") continue;
    IdentityCheck c;
    c.identity = name;
    checks.push_back(std::move(c));
  }

  auto record = [](IdentityCheck& c, bool ok, std::vector<Cochain> inputs) {
    ++c.trials;
    if (!ok && c.holds) {
      c.holds = false;
      c.counterexample = std::move(inputs);
    }
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const Cochain f = random_cochain(rng, degree, n_A, m);
    record(checks[0], phi(r, delta_ce(r, f), convention) == delta_mrbo(r, phi(r, f, convention)), {f});
    record(checks[1], phi(r, Delta(r, f), convention) == Delta(r, phi(r, f, convention)), {f});
    record(checks[2], delta_ce(r, Delta(r, f)) == Delta(r, delta_ce(r, f)), {f});
    record(checks[3], delta_mrbo(r, Delta(r, f)) == Delta(r, delta_mrbo(r, f)), {f});
    if (degree >= 1) {
      const Cochain g = random_cochain(rng, degree - 1, n_A, m);
      const PairCochain lhs = partial_mrbla(r, {Delta(r, f), Delta(r, g)}, convention);
      const PairCochain image = partial_mrbla(r, {f, g}, convention);
      const bool ok = lhs.f == Delta(r, image.f) && lhs.g == Delta(r, image.g);
      record(checks[4], ok, {f, g});
    }
  }
  return checks;
}

}  // namespace mrbld
