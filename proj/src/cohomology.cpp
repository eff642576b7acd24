#include "mrbld/cohomology.hpp"

#include <algorithm>
#include <cctype>

namespace mrbld {

std::string to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::ce: return "ce";
    case ComplexKind::mrbo: return "mrbo";
    case ComplexKind::mrbla: return "mrbla";
    case ComplexKind::mrbld: return "mrbld";
  }
  return "";
}

std::optional<ComplexKind> parse_complex_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (auto k : {ComplexKind::ce, ComplexKind::mrbo, ComplexKind::mrbla, ComplexKind::mrbld})
    if (to_string(k) == lower) return k;
  return std::nullopt;
}

std::size_t first_degree(ComplexKind kind) {
  return kind == ComplexKind::ce || kind == ComplexKind::mrbo ? 0 : 1;
}

std::vector<std::size_t> slot_degrees(ComplexKind kind, std::size_t n) {
  if (n < first_degree(kind))
    throw DegreeOutOfRange("degree " + std::to_string(n) + " is below the start of the " + to_string(kind) +
                           " complex");
  switch (kind) {
    case ComplexKind::ce:
    case ComplexKind::mrbo: return {n};
    case ComplexKind::mrbla: return {n, n - 1};
    case ComplexKind::mrbld: return n == 1 ? std::vector<std::size_t>{1} : std::vector<std::size_t>{n, n - 1, n - 1, n - 2};
  }
  return {};
}

std::size_t space_dim(const Representation& r, ComplexKind kind, std::size_t n) {
  std::size_t total = 0;
  for (auto k : slot_degrees(kind, n)) total += binomial(r.pair.dim(), k) * r.dimV;
  return total;
}

GradedCochain zero_element(const Representation& r, ComplexKind kind, std::size_t n) {
  GradedCochain x;
  for (auto k : slot_degrees(kind, n)) x.push_back(Cochain::zero(k, r.pair.dim(), r.dimV));
  return x;
}

Vector flatten(const GradedCochain& x) {
  Vector out;
  for (const auto& c : x) {
    const Vector v = c.flatten();
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

GradedCochain unflatten(const Representation& r, ComplexKind kind, std::size_t n, const Vector& coords) {
  if (coords.size() != space_dim(r, kind, n)) throw DimensionMismatch("coordinate vector has the wrong length");
  GradedCochain x;
  std::size_t offset = 0;
  for (auto k : slot_degrees(kind, n)) {
    const std::size_t len = binomial(r.pair.dim(), k) * r.dimV;
    x.push_back(Cochain::unflatten(k, r.pair.dim(), r.dimV, Vector(coords.begin() + offset, coords.begin() + offset + len)));
    offset += len;
  }
  return x;
}

bool is_zero(const GradedCochain& x) {
  return std::all_of(x.begin(), x.end(), [](const Cochain& c) { return c.is_zero(); });
}

GradedCochain operator+(const GradedCochain& a, const GradedCochain& b) {
  if (a.size() != b.size()) throw DimensionMismatch("graded cochains with different slot counts");
  GradedCochain out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

GradedCochain operator-(const GradedCochain& a, const GradedCochain& b) {
  if (a.size() != b.size()) throw DimensionMismatch("graded cochains with different slot counts");
  GradedCochain out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

GradedCochain to_slots(const QuadCochain& q) {
  if (q.degree == 1) return {q.f};
  return {q.f, q.g, q.h, q.s};
}

QuadCochain quad_from_slots(const GradedCochain& slots) {
  if (slots.size() == 1) return {1, slots[0], {}, {}, {}};
  if (slots.size() != 4) throw DimensionMismatch("a quad cochain has one or four slots");
  return {slots[0].degree, slots[0], slots[1], slots[2], slots[3]};
}

namespace {

void check_slots(const Representation& r, ComplexKind kind, std::size_t n, const GradedCochain& x) {
  const auto degrees = slot_degrees(kind, n);
  if (x.size() != degrees.size()) throw DimensionMismatch("wrong number of slots for the " + to_string(kind) + " complex");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].degree != degrees[i] || x[i].source_dim != r.pair.dim() || x[i].target_dim != r.dimV)
      throw DimensionMismatch("slot " + std::to_string(i) + " has the wrong shape");
}

}  // namespace

GradedCochain apply_coboundary(const Representation& r, ComplexKind kind, std::size_t n, const GradedCochain& x,
                               PhiConvention convention) {
  check_slots(r, kind, n, x);
  switch (kind) {
    case ComplexKind::ce: return {delta_ce(r, x[0])};
    case ComplexKind::mrbo: return {delta_mrbo(r, x[0])};
    case ComplexKind::mrbla: {
      PairCochain p = partial_mrbla(r, {x[0], x[1]}, convention);
      return {std::move(p.f), std::move(p.g)};
    }
    case ComplexKind::mrbld: return to_slots(D_mrbld(r, quad_from_slots(x), convention));
  }
  return {};
}

Matrix operator_matrix(const Representation& r, ComplexKind kind, std::size_t n, PhiConvention convention) {
  const std::size_t cols = space_dim(r, kind, n), rows = space_dim(r, kind, n + 1);
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Vector unit(cols);
    unit[c] = 1;
    const Vector image = flatten(apply_coboundary(r, kind, n, unflatten(r, kind, n, unit), convention));
    for (std::size_t i = 0; i < rows; ++i) m(i, c) = image[i];
  }
  return m;
}

CohomologyResult cohomology(const Representation& r, ComplexKind kind, std::size_t n, PhiConvention convention) {
  CohomologyResult out;
  out.kind = kind;
  out.degree = n;
  const std::size_t dim = space_dim(r, kind, n);
  const Matrix M = operator_matrix(r, kind, n, convention);
  std::vector<Vector> Z = nullspace_basis(M);
  std::vector<Vector> B;
  if (n > first_degree(kind)) {
    const Matrix prev = operator_matrix(r, kind, n - 1, convention);
    for (auto p : rref(prev).pivots) {
      B.push_back(prev.column(p));
      Vector unit(prev.cols());
      unit[p] = 1;
      out.coboundary_preimages.push_back(unflatten(r, kind, n - 1, unit));
    }
  }
  out.dimZ = Z.size();
  out.dimB = B.size();
  out.dimH = out.dimZ - out.dimB;
  for (const auto& z : Z) out.cocycle_basis.push_back(unflatten(r, kind, n, z));
  for (const auto& b : B) out.coboundary_basis.push_back(unflatten(r, kind, n, b));
  for (const auto& v : extend_basis(B, Z, dim)) out.representatives.push_back(unflatten(r, kind, n, v));
  return out;
}

CocycleVerdict is_cocycle(const Representation& r, ComplexKind kind, std::size_t n, const GradedCochain& x,
                          PhiConvention convention) {
  CocycleVerdict v;
  v.defect = apply_coboundary(r, kind, n, x, convention);
  v.cocycle = is_zero(v.defect);
  return v;
}

std::optional<GradedCochain> coboundary_preimage(const Representation& r, ComplexKind kind, std::size_t n,
                                                 const GradedCochain& x, PhiConvention convention) {
  check_slots(r, kind, n, x);
  if (n == first_degree(kind)) {
    if (is_zero(x)) return GradedCochain{};
    return std::nullopt;
  }
  const auto y = solve(operator_matrix(r, kind, n - 1, convention), flatten(x));
  if (!y) return std::nullopt;
  return unflatten(r, kind, n - 1, *y);
}

}  // namespace mrbld
