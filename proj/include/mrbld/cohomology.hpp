#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mrbld/cochain.hpp"

namespace mrbld {

enum class ComplexKind { ce, mrbo, mrbla, mrbld };

std::string to_string(ComplexKind kind);
/// Accepts "ce", "mrbo", "mrbla", "mrbld" in any case.
std::optional<ComplexKind> parse_complex_kind(std::string_view text);

/// Lowest degree of the complex: 0 for ce and mrbo, 1 for mrbla and mrbld.
std::size_t first_degree(ComplexKind kind);

/// An element of a degree-n space as its slots in the order f, g, h, s.
using GradedCochain = std::vector<Cochain>;

/// Degrees of the slots at degree n: {n} for ce and mrbo, {n, n-1} for
/// mrbla, {1} at degree 1 and {n, n-1, n-1, n-2} above it for mrbld.
/// Throws DegreeOutOfRange below first_degree.
std::vector<std::size_t> slot_degrees(ComplexKind kind, std::size_t n);

std::size_t space_dim(const Representation& r, ComplexKind kind, std::size_t n);
GradedCochain zero_element(const Representation& r, ComplexKind kind, std::size_t n);
Vector flatten(const GradedCochain& x);
GradedCochain unflatten(const Representation& r, ComplexKind kind, std::size_t n, const Vector& coords);
bool is_zero(const GradedCochain& x);
GradedCochain operator+(const GradedCochain& a, const GradedCochain& b);
GradedCochain operator-(const GradedCochain& a, const GradedCochain& b);

GradedCochain to_slots(const QuadCochain& q);
QuadCochain quad_from_slots(const GradedCochain& slots);

/// The coboundary of the given complex from degree n to n+1.
GradedCochain apply_coboundary(const Representation& r, ComplexKind kind, std::size_t n, const GradedCochain& x,
                               PhiConvention convention = PhiConvention::corrected);

/// Matrix of the degree-n coboundary in the canonical coordinates
/// (slot by slot, tuples lexicographically, then target index).
Matrix operator_matrix(const Representation& r, ComplexKind kind, std::size_t n,
                       PhiConvention convention = PhiConvention::corrected);

struct CohomologyResult {
  ComplexKind kind = ComplexKind::ce;
  std::size_t degree = 0;
  std::size_t dimZ = 0;
  std::size_t dimB = 0;
  std::size_t dimH = 0;
  std::vector<GradedCochain> cocycle_basis;
  std::vector<GradedCochain> coboundary_basis;
  /// coboundary_basis[i] is the coboundary of coboundary_preimages[i].
  std::vector<GradedCochain> coboundary_preimages;
  /// Cocycles completing the coboundary basis to a basis of Z.
  std::vector<GradedCochain> representatives;
};

/// Z is the kernel of the degree-n coboundary and B the image of the
/// degree-(n-1) one; B is zero in the first degree of each complex.
CohomologyResult cohomology(const Representation& r, ComplexKind kind, std::size_t n,
                            PhiConvention convention = PhiConvention::corrected);

struct CocycleVerdict {
  bool cocycle = true;
  GradedCochain defect;  // the coboundary of the input
};

CocycleVerdict is_cocycle(const Representation& r, ComplexKind kind, std::size_t n, const GradedCochain& x,
                          PhiConvention convention = PhiConvention::corrected);

/// Some y with coboundary(y) = x at degree n-1 -> n, or nullopt when x is
/// not a coboundary. Always nullopt-or-zero in the first degree.
std::optional<GradedCochain> coboundary_preimage(const Representation& r, ComplexKind kind, std::size_t n,
                                                 const GradedCochain& x,
                                                 PhiConvention convention = PhiConvention::corrected);

}  // namespace mrbld
