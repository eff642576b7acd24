#include "mrbld/json_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

namespace mrbld::json_io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& problem) {
  throw ParseError("field '" + field + "': " + problem);
}

std::string at(const std::string& parent, const std::string& key) { return parent.empty() ? key : parent + "." + key; }
std::string at(const std::string& parent, std::size_t index) { return parent + "[" + std::to_string(index) + "]"; }

void require_object(const Json& j, const std::string& field, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(field.empty() ? "<document>" : field, "expected an object");
  for (const char* key : required)
    if (!j.contains(key)) fail(at(field, key), "missing");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : required) known = known || item.key() == key;
    for (const char* key : optional) known = known || item.key() == key;
    if (!known) fail(at(field, item.key()), "unknown field");
  }
}

const Json& require_array(const Json& j, const std::string& field, std::size_t size) {
  if (!j.is_array()) fail(field, "expected an array");
  if (j.size() != size) fail(field, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::size_t read_count(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected a non-negative integer");
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  const long long v = j.get<long long>();
  if (v < 0) fail(field, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::string normalize_minus(std::string text) {
  const std::string unicode_minus = "−";
  for (std::size_t pos; (pos = text.find(unicode_minus)) != std::string::npos;) text.replace(pos, unicode_minus.size(), "-");
  return text;
}

Vector read_vector(const Json& j, const std::string& field, std::size_t size) {
  require_array(j, field, size);
  Vector out;
  for (std::size_t i = 0; i < size; ++i) out.push_back(read_rational(j[i], at(field, i)));
  return out;
}

std::vector<std::size_t> parse_tuple_key(const std::string& key, const std::string& field, std::size_t degree,
                                         std::size_t source_dim) {
  std::vector<std::size_t> tuple;
  if (!key.empty()) {
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) fail(field, "malformed index tuple");
      tuple.push_back(std::stoul(part));
    }
  }
  if (tuple.size() != degree) fail(field, "index tuple must have " + std::to_string(degree) + " entries");
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (tuple[k] >= source_dim) fail(field, "index out of range");
    if (k > 0 && tuple[k] <= tuple[k - 1]) fail(field, "index tuple must be strictly increasing");
  }
  return tuple;
}

LieAlgebra read_algebra(const Json& j, const std::string& field) {
  require_object(j, field, {"dim", "brackets"});
  const std::size_t n = read_count(j["dim"], at(field, "dim"));
  const std::string bf = at(field, "brackets");
  if (!j["brackets"].is_array()) fail(bf, "expected an array");
  LieAlgebra alg(n);
  std::vector<bool> seen(n * n, false);
  for (std::size_t b = 0; b < j["brackets"].size(); ++b) {
    const Json& entry = j["brackets"][b];
    const std::string ef = at(bf, b);
    require_object(entry, ef, {"i", "j", "out"});
    const std::size_t i = read_count(entry["i"], at(ef, "i"));
    const std::size_t k = read_count(entry["j"], at(ef, "j"));
    if (i >= n) fail(at(ef, "i"), "index out of range");
    if (k >= n) fail(at(ef, "j"), "index out of range");
    if (i >= k) fail(ef, "brackets are given for i < j only");
    if (seen[i * n + k]) fail(ef, "duplicate bracket");
    seen[i * n + k] = true;
    const std::string of = at(ef, "out");
    if (!entry["out"].is_array()) fail(of, "expected an array of [coefficient, index] terms");
    Vector value = zero_vector(n);
    for (std::size_t t = 0; t < entry["out"].size(); ++t) {
      const std::string tf = at(of, t);
      const Json& term = require_array(entry["out"][t], tf, 2);
      const std::size_t idx = read_count(term[1], at(tf, 1));
      if (idx >= n) fail(at(tf, 1), "index out of range");
      value[idx] += read_rational(term[0], at(tf, 0));
    }
    alg.set_bracket(i, k, value);
  }
  return alg;
}

MRBLieDerPair read_pair_fields(const Json& j, const std::string& field) {
  MRBLieDerPair p;
  p.weight = read_rational(j["weight"], at(field, "weight"));
  p.algebra = read_algebra(j["algebra"], at(field, "algebra"));
  p.R = read_matrix(j["R"], at(field, "R"), p.dim(), p.dim());
  p.d = read_matrix(j["d"], at(field, "d"), p.dim(), p.dim());
  return p;
}

}  // namespace

Json load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Rational read_rational(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(field, "expected a rational as a string or an integer");
  try {
    return Rational::parse(normalize_minus(j.get<std::string>()));
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

Matrix read_matrix(const Json& j, const std::string& field, std::size_t rows, std::size_t cols) {
  require_array(j, field, rows);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = read_vector(j[r], at(field, r), cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

MRBLieDerPair read_pair(const Json& j, const std::string& field) {
  require_object(j, field, {"weight", "algebra", "R", "d"});
  return read_pair_fields(j, field);
}

bool is_representation_document(const Json& j) { return j.is_object() && j.contains("dimV"); }

Representation read_representation(const Json& j) {
  require_object(j, "", {"weight", "algebra", "R", "d", "dimV", "rho", "RV", "dV"});
  Representation r;
  r.pair = read_pair_fields(j, "");
  r.dimV = read_count(j["dimV"], "dimV");
  require_array(j["rho"], "rho", r.pair.dim());
  for (std::size_t i = 0; i < r.pair.dim(); ++i) r.rho.push_back(read_matrix(j["rho"][i], at("rho", i), r.dimV, r.dimV));
  r.RV = read_matrix(j["RV"], "RV", r.dimV, r.dimV);
  r.dV = read_matrix(j["dV"], "dV", r.dimV, r.dimV);
  return r;
}

Cochain read_cochain(const Json& j, const std::string& field, std::size_t source_dim) {
  require_object(j, field, {"degree", "sourceDim", "targetDim", "values"});
  const std::size_t degree = read_count(j["degree"], at(field, "degree"));
  const std::size_t src = read_count(j["sourceDim"], at(field, "sourceDim"));
  const std::size_t tgt = read_count(j["targetDim"], at(field, "targetDim"));
  if (src != source_dim) fail(at(field, "sourceDim"), "expected " + std::to_string(source_dim));
  Cochain c = Cochain::zero(degree, src, tgt);
  const std::string vf = at(field, "values");
  if (!j["values"].is_object()) fail(vf, "expected an object keyed by index tuples");
  for (const auto& item : j["values"].items()) {
    const std::string kf = vf + "[\"" + item.key() + "\"]";
    const auto tuple = parse_tuple_key(item.key(), kf, degree, src);
    c.values[degree == 0 ? 0 : combination_index(tuple, src)] = read_vector(item.value(), kf, tgt);
  }
  return c;
}

DeformationJet read_jet(const Json& j, const MRBLieDerPair& base) {
  require_object(j, "", {"order", "mu", "R", "d"}, {"base"});
  DeformationJet jet;
  jet.base = j.contains("base") ? read_pair(j["base"], "base") : base;
  jet.order = read_count(j["order"], "order");
  if (jet.order == 0) fail("order", "must be at least 1");
  const std::size_t n = jet.base.dim();
  require_array(j["mu"], "mu", jet.order);
  require_array(j["R"], "R", jet.order);
  require_array(j["d"], "d", jet.order);
  for (std::size_t i = 0; i < jet.order; ++i) {
    Cochain mu = read_cochain(j["mu"][i], at("mu", i), n);
    if (mu.degree != 2 || mu.target_dim != n) fail(at("mu", i), "expected a degree-2 cochain with values in the algebra");
    jet.mu.push_back(std::move(mu));
    jet.R.push_back(read_matrix(j["R"][i], at("R", i), n, n));
    jet.d.push_back(read_matrix(j["d"][i], at("d", i), n, n));
  }
  return jet;
}

EquivalenceJet read_equivalence(const Json& j, std::size_t dim) {
  require_object(j, "", {"psi"});
  if (!j["psi"].is_array() || j["psi"].empty()) fail("psi", "expected a non-empty array of matrices");
  EquivalenceJet e;
  for (std::size_t i = 0; i < j["psi"].size(); ++i) e.psi.push_back(read_matrix(j["psi"][i], at("psi", i), dim, dim));
  return e;
}

VData read_kernel(const Json& j, const std::string& field) {
  require_object(j, field, {"dimV", "RV", "dV"}, {"brackets"});
  VData v;
  v.dimV = read_count(j["dimV"], at(field, "dimV"));
  v.RV = read_matrix(j["RV"], at(field, "RV"), v.dimV, v.dimV);
  v.dV = read_matrix(j["dV"], at(field, "dV"), v.dimV, v.dimV);
  v.bracket = LieAlgebra(v.dimV);
  if (j.contains("brackets")) {
    Json alg = {{"dim", v.dimV}, {"brackets", j["brackets"]}};
    v.bracket = read_algebra(alg, field);
    if (!v.bracket.is_abelian()) fail(at(field, "brackets"), "the kernel must be abelian");
  }
  return v;
}

ExtensionPresentation read_presentation(const Json& j) {
  require_object(j, "", {"base", "kernel", "total"}, {"section"});
  ExtensionPresentation x;
  x.base = read_pair(j["base"], "base");
  x.kernel = read_kernel(j["kernel"], "kernel");
  x.total = read_pair(j["total"], "total");
  const std::size_t n = x.base.dim();
  const std::size_t m = x.kernel.dimV;
  x.section = j.contains("section") ? read_matrix(j["section"], "section", n + m, n) : canonical_section(n, m);
  return x;
}

CocycleTriple read_triple(const Json& j, std::size_t dimA, std::size_t dimV) {
  require_object(j, "", {"Theta", "xi", "chi"});
  CocycleTriple t{read_cochain(j["Theta"], "Theta", dimA), read_cochain(j["xi"], "xi", dimA),
                  read_cochain(j["chi"], "chi", dimA)};
  auto expect = [&](const Cochain& c, std::size_t degree, const char* field) {
    if (c.degree != degree) fail(field, "expected degree " + std::to_string(degree));
    if (c.target_dim != dimV) fail(field, "expected targetDim " + std::to_string(dimV));
  };
  expect(t.Theta, 2, "Theta");
  expect(t.xi, 1, "xi");
  expect(t.chi, 1, "chi");
  return t;
}

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(q.str());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const LieAlgebra& alg) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j) {
      const Vector v = alg.bracket_basis(i, j);
      Json out = Json::array();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out.push_back(Json::array({v[k].str(), k}));
      if (!out.empty()) brackets.push_back({{"i", i}, {"j", j}, {"out", out}});
    }
  return {{"dim", alg.dim()}, {"brackets", brackets}};
}

Json to_json(const MRBLieDerPair& p) {
  return {{"weight", p.weight.str()}, {"algebra", to_json(p.algebra)}, {"R", to_json(p.R)}, {"d", to_json(p.d)}};
}

Json to_json(const Representation& r) {
  Json out = to_json(r.pair);
  out["dimV"] = r.dimV;
  Json rho = Json::array();
  for (const auto& m : r.rho) rho.push_back(to_json(m));
  out["rho"] = rho;
  out["RV"] = to_json(r.RV);
  out["dV"] = to_json(r.dV);
  return out;
}

Json to_json(const Cochain& c) {
  Json values = Json::object();
  const auto tuples = combinations(c.source_dim, c.degree);
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    if (is_zero(c.values[k])) continue;
    std::string key;
    for (std::size_t t = 0; t < tuples[k].size(); ++t) key += (t ? "," : "") + std::to_string(tuples[k][t]);
    values[key] = to_json(c.values[k]);
  }
  return {{"degree", c.degree}, {"sourceDim", c.source_dim}, {"targetDim", c.target_dim}, {"values", values}};
}

Json to_json(const GradedCochain& x) {
  static const char* names[] = {"f", "g", "h", "s"};
  Json out = Json::object();
  for (std::size_t i = 0; i < x.size(); ++i) out[names[i]] = to_json(x[i]);
  return out;
}

Json to_json(const DeformationJet& j) {
  Json mu = Json::array(), R = Json::array(), d = Json::array();
  for (std::size_t i = 0; i < j.order; ++i) {
    mu.push_back(to_json(j.mu[i]));
    R.push_back(to_json(j.R[i]));
    d.push_back(to_json(j.d[i]));
  }
  return {{"order", j.order}, {"mu", mu}, {"R", R}, {"d", d}};
}

Json to_json(const VData& v) { return {{"dimV", v.dimV}, {"RV", to_json(v.RV)}, {"dV", to_json(v.dV)}}; }

Json to_json(const CocycleTriple& t) {
  return {{"Theta", to_json(t.Theta)}, {"xi", to_json(t.xi)}, {"chi", to_json(t.chi)}};
}

Json to_json(const ExtensionPresentation& x) {
  return {{"base", to_json(x.base)}, {"kernel", to_json(x.kernel)}, {"total", to_json(x.total)}, {"section", to_json(x.section)}};
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"identity", v.identity}, {"indices", v.indices}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}});
  return {{"ok", report.ok()}, {"violations", violations}};
}

Json to_json(const CohomologyResult& result) {
  auto list = [](const std::vector<GradedCochain>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
  };
  return {{"complex", to_string(result.kind)},
          {"degree", result.degree},
          {"dimZ", result.dimZ},
          {"dimB", result.dimB},
          {"dimH", result.dimH},
          {"cocycleBasis", list(result.cocycle_basis)},
          {"coboundaryBasis", list(result.coboundary_basis)},
          {"representatives", list(result.representatives)}};
}

Json to_json(const ClassifyVerdict& verdict) {
  Json out = {{"equivalent", verdict.equivalent}};
  if (verdict.witness) out["witness"] = to_json(*verdict.witness);
  if (verdict.gamma) out["gamma"] = to_json(*verdict.gamma);
  if (verdict.witness) out["morphismReport"] = to_json(verdict.morphism_report);
  return out;
}

}  // namespace mrbld::json_io
