#include "mrbld/extension.hpp"

#include "mrbld/random_instances.hpp"

namespace mrbld {

namespace {

Vector head(const Vector& x, std::size_t n) { return Vector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n)); }
Vector tail(const Vector& x, std::size_t n) { return Vector(x.begin() + static_cast<std::ptrdiff_t>(n), x.end()); }

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void check_kernel(const VData& v) {
  if (v.RV.rows() != v.dimV || v.RV.cols() != v.dimV || v.dV.rows() != v.dimV || v.dV.cols() != v.dimV)
    throw DimensionMismatch("kernel operators must be " + std::to_string(v.dimV) + "x" + std::to_string(v.dimV));
  if (v.bracket.dim() != 0 && v.bracket.dim() != v.dimV)
    throw DimensionMismatch("kernel bracket has dimension " + std::to_string(v.bracket.dim()));
  if (!v.bracket.is_abelian()) throw InvalidExtension("kernel bracket must vanish");
}

void check_triple(const MRBLieDerPair& p, const VData& v, const CocycleTriple& t) {
  auto expect = [&](const Cochain& c, std::size_t degree, const char* name) {
    if (c.degree != degree || c.source_dim != p.dim() || c.target_dim != v.dimV)
      throw DimensionMismatch(std::string(name) + " has the wrong degree or dimensions");
  };
  expect(t.Theta, 2, "Theta");
  expect(t.xi, 1, "xi");
  expect(t.chi, 1, "chi");
}

// Total-space vector of the section applied to e_i.
Vector section_of(const ExtensionPresentation& x, std::size_t i) { return x.section.column(i); }

}  // namespace

CocycleTriple CocycleTriple::zero(std::size_t dimA, std::size_t dimV) {
  return {Cochain::zero(2, dimA, dimV), Cochain::zero(1, dimA, dimV), Cochain::zero(1, dimA, dimV)};
}

GradedCochain CocycleTriple::slots() const {
  return {Theta, xi, chi, Cochain::zero(0, Theta.source_dim, Theta.target_dim)};
}

CocycleTriple CocycleTriple::from_slots(const GradedCochain& x) {
  if (x.size() != 4) throw DimensionMismatch("a degree-2 combined element has four slots");
  return {x[0], x[1], x[2]};
}

CocycleTriple operator+(const CocycleTriple& a, const CocycleTriple& b) {
  return {a.Theta + b.Theta, a.xi + b.xi, a.chi + b.chi};
}

CocycleTriple operator-(const CocycleTriple& a, const CocycleTriple& b) {
  return {a.Theta - b.Theta, a.xi - b.xi, a.chi - b.chi};
}

Representation trivial_coefficients(const MRBLieDerPair& p, const VData& v) {
  check_kernel(v);
  Representation r = trivial_representation(p, v.RV, v.dV);
  ValidationReport report = validate_representation(r);
  if (!report.ok()) throw InvalidRepresentation("kernel operators are incompatible: " + report.summary(), report);
  return r;
}

std::vector<CocycleTriple> cocycle_triple_basis(const MRBLieDerPair& p, const VData& v, PhiConvention convention) {
  const Representation r = trivial_coefficients(p, v);
  const Matrix full = operator_matrix(r, ComplexKind::mrbld, 2, convention);
  // The s slot (a single vector of V) comes last in the coordinates.
  const std::size_t used = full.cols() - v.dimV;
  std::vector<CocycleTriple> out;
  for (Vector b : nullspace_basis(full.block(0, 0, full.rows(), used))) {
    b.resize(full.cols());
    out.push_back(CocycleTriple::from_slots(unflatten(r, ComplexKind::mrbld, 2, b)));
  }
  return out;
}

VData random_kernel(Rng& rng) {
  const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 2));
  const Matrix RV = random_matrix(rng, m, m, -2, 2);
  const Matrix dV = Rational(rng.uniform(-2, 2)) * Matrix::identity(m) + Rational(rng.uniform(-2, 2)) * RV;
  return {m, RV, dV, LieAlgebra(m)};
}

CocycleTriple random_cocycle_triple(Rng& rng, const MRBLieDerPair& p, const VData& v, PhiConvention convention) {
  CocycleTriple t = CocycleTriple::zero(p.dim(), v.dimV);
  for (const auto& b : cocycle_triple_basis(p, v, convention)) {
    const Rational c(rng.uniform(-3, 3));
    t = t + CocycleTriple{c * b.Theta, c * b.xi, c * b.chi};
  }
  return t;
}

CocycleTriple random_triple(Rng& rng, std::size_t dimA, std::size_t dimV) {
  return {random_cochain(rng, 2, dimA, dimV), random_cochain(rng, 1, dimA, dimV), random_cochain(rng, 1, dimA, dimV)};
}

Matrix canonical_section(std::size_t dimA, std::size_t dimV) {
  return Matrix::identity(dimA).vstack(Matrix(dimV, dimA));
}

ExtensionPresentation force_build(const MRBLieDerPair& p, const VData& v, const CocycleTriple& t) {
  check_shapes(p);
  check_kernel(v);
  check_triple(p, v, t);
  const std::size_t n = p.dim();
  const std::size_t m = v.dimV;
  LieAlgebra total(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) total.set_bracket(i, j, concat(p.algebra.bracket_basis(i, j), t.Theta.at({i, j})));
  const Matrix xi = t.xi.to_matrix();
  const Matrix chi = t.chi.to_matrix();
  Matrix R = p.R.vstack(xi).hstack(Matrix(n, m).vstack(v.RV));
  Matrix d = p.d.vstack(chi).hstack(Matrix(n, m).vstack(v.dV));
  return {p, v, MRBLieDerPair{std::move(total), p.weight, std::move(R), std::move(d)}, canonical_section(n, m)};
}

ExtensionPresentation build_extension(const MRBLieDerPair& p, const VData& v, const CocycleTriple& t,
                                      PhiConvention convention) {
  check_triple(p, v, t);
  const Representation r = trivial_coefficients(p, v);
  CocycleVerdict verdict = is_cocycle(r, ComplexKind::mrbld, 2, t.slots(), convention);
  if (!verdict.cocycle) throw NotCocycle("triple is not a cocycle", std::move(verdict.defect));
  return force_build(p, v, t);
}

ValidationReport validate_extension(const ExtensionPresentation& x) {
  check_shapes(x.base);
  check_shapes(x.total);
  check_kernel(x.kernel);
  const std::size_t n = x.base.dim();
  const std::size_t m = x.kernel.dimV;
  if (x.total.dim() != n + m) throw DimensionMismatch("total dimension must be dim A + dim V");
  if (x.section.rows() != n + m || x.section.cols() != n) throw DimensionMismatch("section must be (dim A + dim V) x dim A");

  ValidationReport out;
  auto note = [&](const char* identity, std::vector<std::size_t> idx, Vector lhs, Vector rhs) {
    if (lhs != rhs) out.violations.push_back({identity, std::move(idx), std::move(lhs), std::move(rhs)});
  };
  auto prefixed = [&](const ValidationReport& r, const std::string& prefix) {
    for (Violation v : r.violations) {
      v.identity = prefix + v.identity;
      out.violations.push_back(std::move(v));
    }
  };
  prefixed(validate_pair(x.base), "base:");
  prefixed(validate_pair(x.total), "total:");

  for (std::size_t i = 0; i < n; ++i) note("section", {i}, head(section_of(x, i), n), unit_vector(n, i));

  const Vector zeroA = zero_vector(n);
  for (std::size_t u = n; u < n + m; ++u)
    for (std::size_t w = u + 1; w < n + m; ++w) note("abelian-kernel", {u, w}, x.total.algebra.bracket_basis(u, w), zero_vector(n + m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = n; u < n + m; ++u) note("kernel-ideal", {i, u}, head(x.total.algebra.bracket_basis(i, u), n), zeroA);

  // Projection onto A: p[x,y] = [px,py], p R = R p, p d = d p on A-indices.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      note("projection-morphism", {i, j}, head(x.total.algebra.bracket_basis(i, j), n), x.base.algebra.bracket_basis(i, j));
    note("projection-morphism", {i}, head(x.total.R.column(i), n), x.base.R.column(i));
    note("projection-morphism", {i}, head(x.total.d.column(i), n), x.base.d.column(i));
  }
  // Inclusion of V: the total operator and derivation restrict to R_V, d_V.
  for (std::size_t u = 0; u < m; ++u) {
    note("inclusion-morphism", {n + u}, x.total.R.column(n + u), concat(zeroA, x.kernel.RV.column(u)));
    note("inclusion-morphism", {n + u}, x.total.d.column(n + u), concat(zeroA, x.kernel.dV.column(u)));
  }
  return out;
}

CocycleTriple extract_cocycle(const ExtensionPresentation& x) {
  ValidationReport report = validate_extension(x);
  if (!report.ok()) throw InvalidExtension("not an extension: " + report.summary(), report);
  const std::size_t n = x.base.dim();
  const std::size_t m = x.kernel.dimV;
  CocycleTriple t = CocycleTriple::zero(n, m);
  const auto& pairs = combinations(n, 2);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::size_t i = pairs[k][0], j = pairs[k][1];
    Vector val = sub(x.total.algebra.bracket(section_of(x, i), section_of(x, j)),
                     x.section * x.base.algebra.bracket_basis(i, j));
    t.Theta.values[k] = tail(val, n);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vector s = section_of(x, i);
    t.xi.values[i] = tail(sub(x.total.R * s, x.section * x.base.R.column(i)), n);
    t.chi.values[i] = tail(sub(x.total.d * s, x.section * x.base.d.column(i)), n);
  }
  return t;
}

InducedRepresentation induced_rep_from_section(const ExtensionPresentation& x) {
  ValidationReport report = validate_extension(x);
  if (!report.ok()) throw InvalidExtension("not an extension: " + report.summary(), report);
  const std::size_t n = x.base.dim();
  const std::size_t m = x.kernel.dimV;
  Representation r;
  r.pair = x.base;
  r.dimV = m;
  r.RV = x.kernel.RV;
  r.dV = x.kernel.dV;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix act(m, m);
    for (std::size_t u = 0; u < m; ++u)
      act.set_column(u, tail(x.total.algebra.bracket(section_of(x, i), unit_vector(n + m, n + u)), n));
    r.rho.push_back(std::move(act));
  }
  ValidationReport rep_report = validate_representation(r);
  return {std::move(r), std::move(rep_report)};
}

ExtensionPresentation with_section_shift(const ExtensionPresentation& x, const Matrix& h) {
  const std::size_t n = x.base.dim();
  if (h.rows() != x.kernel.dimV || h.cols() != n) throw DimensionMismatch("section shift must be dim V x dim A");
  ExtensionPresentation out = x;
  out.section = x.section + Matrix(n, n).vstack(h);
  return out;
}

ClassifyVerdict classify(const MRBLieDerPair& p, const VData& v, const CocycleTriple& t1, const CocycleTriple& t2,
                         PhiConvention convention) {
  const ExtensionPresentation x1 = build_extension(p, v, t1, convention);
  const ExtensionPresentation x2 = build_extension(p, v, t2, convention);
  const Representation r = trivial_coefficients(p, v);
  ClassifyVerdict verdict;
  auto pre = coboundary_preimage(r, ComplexKind::mrbld, 2, (t1 - t2).slots(), convention);
  if (!pre) return verdict;
  const Matrix h = (*pre)[0].to_matrix();
  const std::size_t n = p.dim();
  const std::size_t m = v.dimV;
  Matrix gamma = Matrix::identity(n).vstack(h).hstack(Matrix(n, m).vstack(Matrix::identity(m)));
  verdict.morphism_report = validate_morphism({x1.total, x2.total, gamma});
  verdict.equivalent = verdict.morphism_report.ok();
  verdict.witness = h;
  verdict.gamma = std::move(gamma);
  return verdict;
}

}  // namespace mrbld
