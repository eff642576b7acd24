#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "mrbld/cohomology.hpp"
#include "mrbld/deformation.hpp"
#include "mrbld/extension.hpp"

namespace mrbld::json_io {

using Json = nlohmann::ordered_json;

/// Reads and parses a file. Throws ParseError naming the path.
Json load(const std::filesystem::path& path);

// Every reader throws ParseError with the dotted path of the offending
// field, rejects unknown fields, and accepts rationals as strings ("-3/4")
// or integers. Floating-point numbers are rejected.

Rational read_rational(const Json& j, const std::string& field);
Matrix read_matrix(const Json& j, const std::string& field, std::size_t rows, std::size_t cols);

MRBLieDerPair read_pair(const Json& j, const std::string& field = "");
/// A pair document with the additional fields "dimV", "rho", "RV", "dV".
Representation read_representation(const Json& j);
/// True if the document has representation fields.
bool is_representation_document(const Json& j);

Cochain read_cochain(const Json& j, const std::string& field, std::size_t source_dim);
/// {"order", "mu", "R", "d"} over the given base; an optional "base" field
/// holding a pair document overrides it.
DeformationJet read_jet(const Json& j, const MRBLieDerPair& base);
/// {"psi": [matrix, ...]} indexed from t^1.
EquivalenceJet read_equivalence(const Json& j, std::size_t dim);
/// {"dimV", "RV", "dV"} with an optional "brackets" list that must be empty
/// or all-zero.
VData read_kernel(const Json& j, const std::string& field = "");
/// {"base": pair, "kernel": kernel, "total": pair} with an optional
/// "section" matrix (canonical when absent).
ExtensionPresentation read_presentation(const Json& j);
CocycleTriple read_triple(const Json& j, std::size_t dimA, std::size_t dimV);

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const LieAlgebra& alg);
Json to_json(const MRBLieDerPair& p);
Json to_json(const Representation& r);
Json to_json(const Cochain& c);
Json to_json(const GradedCochain& x);
Json to_json(const DeformationJet& j);
Json to_json(const VData& v);
Json to_json(const CocycleTriple& t);
Json to_json(const ExtensionPresentation& x);
Json to_json(const ValidationReport& report);
Json to_json(const CohomologyResult& result);
Json to_json(const ClassifyVerdict& verdict);

}  // namespace mrbld::json_io
