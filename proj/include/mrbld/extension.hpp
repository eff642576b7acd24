#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "mrbld/cohomology.hpp"

namespace mrbld {

class Rng;

/// (Theta, xi, chi): a degree-2 and two degree-1 cochains with values in V.
struct CocycleTriple {
  Cochain Theta;
  Cochain xi;
  Cochain chi;

  static CocycleTriple zero(std::size_t dimA, std::size_t dimV);
  /// The degree-2 combined element ((Theta, xi), (chi, 0)).
  GradedCochain slots() const;
  static CocycleTriple from_slots(const GradedCochain& x);
  friend bool operator==(const CocycleTriple&, const CocycleTriple&) = default;
};

CocycleTriple operator+(const CocycleTriple& a, const CocycleTriple& b);
CocycleTriple operator-(const CocycleTriple& a, const CocycleTriple& b);

/// The kernel (V, R_V, d_V). V carries the zero bracket; a nonzero one is
/// rejected by every operation here.
struct VData {
  std::size_t dimV = 0;
  Matrix RV;
  Matrix dV;
  LieAlgebra bracket;  // must be abelian of dimension dimV
};

/// Trivial representation of p on V (zero action, R_V and d_V kept).
/// Throws InvalidExtension for a nonabelian V and InvalidRepresentation when
/// R_V and d_V do not commute.
Representation trivial_coefficients(const MRBLieDerPair& p, const VData& v);

/// Extension pair on A + V (A-indices first) with a section s: A -> A + V
/// given as a (dimA + dimV) x dimA matrix.
struct ExtensionPresentation {
  MRBLieDerPair base;
  VData kernel;
  MRBLieDerPair total;
  Matrix section;
};

class InvalidExtension : public Error {
 public:
  InvalidExtension(const std::string& what, ValidationReport report = {}) : Error(what), report(std::move(report)) {}
  ValidationReport report;
};

class NotCocycle : public Error {
 public:
  NotCocycle(const std::string& what, GradedCochain defect) : Error(what), defect(std::move(defect)) {}
  /// The four components: Lie, operator, derivation and commutation defects.
  GradedCochain defect;
};

/// Checks p s = Id, that V is an abelian ideal, that the projection onto A
/// and the inclusion of V are compatible with the brackets and operators,
/// and that base and total are valid pairs. Identities: "section",
/// "abelian-kernel", "kernel-ideal", "projection-morphism",
/// "inclusion-morphism", plus those of validate_pair prefixed "total:" or
/// "base:".
ValidationReport validate_extension(const ExtensionPresentation& x);

/// Basis of the triples that are cocycles with trivial coefficients.
std::vector<CocycleTriple> cocycle_triple_basis(const MRBLieDerPair& p, const VData& v,
                                                PhiConvention convention = PhiConvention::corrected);

/// Kernel of dimension 1 or 2 with random R_V and d_V = a Id + b R_V.
VData random_kernel(Rng& rng);

/// Random integer combination of cocycle_triple_basis.
CocycleTriple random_cocycle_triple(Rng& rng, const MRBLieDerPair& p, const VData& v,
                                    PhiConvention convention = PhiConvention::corrected);

/// Triple with independent random entries, usually not a cocycle.
CocycleTriple random_triple(Rng& rng, std::size_t dimA, std::size_t dimV);

/// Canonical section s(a) = a + 0.
Matrix canonical_section(std::size_t dimA, std::size_t dimV);

/// (A + V, [a+u,b+v] = [a,b] + Theta(a,b), R_xi, d_chi) without any check.
ExtensionPresentation force_build(const MRBLieDerPair& p, const VData& v, const CocycleTriple& t);

/// force_build after checking that t is a cocycle with trivial
/// coefficients; throws NotCocycle otherwise.
ExtensionPresentation build_extension(const MRBLieDerPair& p, const VData& v, const CocycleTriple& t,
                                      PhiConvention convention = PhiConvention::corrected);

/// Theta(a,b) = [s a, s b] - s[a,b], xi(a) = R s a - s R a,
/// chi(a) = d s a - s d a, read in V. Throws InvalidExtension.
CocycleTriple extract_cocycle(const ExtensionPresentation& x);

/// rho(a) u = [s a, u] together with the restrictions of the total
/// operator and derivation to V, and its validation report.
struct InducedRepresentation {
  Representation representation;
  ValidationReport report;
};

InducedRepresentation induced_rep_from_section(const ExtensionPresentation& x);

/// The same extension with section s + h, where h: A -> V is dimV x dimA.
ExtensionPresentation with_section_shift(const ExtensionPresentation& x, const Matrix& h);

struct ClassifyVerdict {
  bool equivalent = false;
  /// h: A -> V with t1 - t2 = D^1(h), when equivalent.
  std::optional<Matrix> witness;
  /// gamma(a+u) = a + h(a) + u from the extension of t1 to that of t2.
  std::optional<Matrix> gamma;
  ValidationReport morphism_report;
};

/// Throws NotCocycle if either triple is not a cocycle.
ClassifyVerdict classify(const MRBLieDerPair& p, const VData& v, const CocycleTriple& t1, const CocycleTriple& t2,
                         PhiConvention convention = PhiConvention::corrected);

}  // namespace mrbld
