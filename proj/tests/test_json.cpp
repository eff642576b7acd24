#include <doctest.h>

#include <functional>
#include <string>

#include "mrbld/json_io.hpp"
#include "mrbld/random_instances.hpp"

using namespace mrbld;
using json_io::Json;

namespace {

std::string parse_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* example = R"({
  "weight": "−1",
  "algebra": { "dim": 2, "brackets": [ { "i": 0, "j": 1, "out": [["1", 1]] } ] },
  "R": [["2","0"],["0","1"]],
  "d": [["0","0"],["0","3"]]
})";

}  // namespace

TEST_CASE("the documented pair format") {
  const MRBLieDerPair p = json_io::read_pair(Json::parse(example));
  CHECK(p == catalog::example_pair());
  CHECK(json_io::read_pair(json_io::to_json(p)) == p);
}

TEST_CASE("round trips") {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const MRBLieDerPair p = random_pair(rng);
    CHECK(json_io::read_pair(Json::parse(json_io::to_json(p).dump())) == p);
    const Representation r = random_representation(rng, p);
    CHECK(json_io::read_representation(Json::parse(json_io::to_json(r).dump())) == r);
    const Cochain c = random_cochain(rng, 2, p.dim(), 3);
    CHECK(json_io::read_cochain(json_io::to_json(c), "c", p.dim()) == c);
    const VData v = random_kernel(rng);
    const VData back = json_io::read_kernel(json_io::to_json(v));
    CHECK((back.RV == v.RV && back.dV == v.dV && back.dimV == v.dimV));
    const CocycleTriple t = random_triple(rng, p.dim(), v.dimV);
    CHECK(json_io::read_triple(json_io::to_json(t), p.dim(), v.dimV) == t);
    const DeformationJet j = sample_order1_jet(rng, p);
    CHECK(json_io::read_jet(json_io::to_json(j), p) == j);
    const ExtensionPresentation x = force_build(p, v, t);
    const ExtensionPresentation y = json_io::read_presentation(json_io::to_json(x));
    CHECK((y.total == x.total && y.section == x.section && y.base == x.base));
  }
}

TEST_CASE("cochain documents") {
  const Json doc = Json::parse(R"({ "degree": 2, "sourceDim": 2, "targetDim": 2, "values": { "0,1": ["1","0"] } })");
  const Cochain c = json_io::read_cochain(doc, "f", 2);
  CHECK(c.at({1, 0}) == Vector{-1, 0});
  CHECK(json_io::to_json(c) == doc);
  Json bad = doc;
  bad["values"] = {{"1,0", {"1", "0"}}};
  CHECK(parse_error([&] { json_io::read_cochain(bad, "f", 2); }).find("strictly increasing") != std::string::npos);
}

TEST_CASE("malformed documents name the offending field") {
  auto message = [](const std::string& text) {
    return parse_error([&] { json_io::read_pair(Json::parse(text)); });
  };
  Json doc = Json::parse(example);
  auto with = [&](const std::function<void(Json&)>& edit) {
    Json d = doc;
    edit(d);
    return message(d.dump());
  };
  CHECK(with([](Json& d) { d["weight"] = 0.5; }).find("'weight'") != std::string::npos);
  CHECK(with([](Json& d) { d["weight"] = "1/0"; }).find("'weight'") != std::string::npos);
  CHECK(with([](Json& d) { d["R"][1][0] = "x"; }).find("'R[1][0]'") != std::string::npos);
  CHECK(with([](Json& d) { d["R"].erase(1); }).find("'R'") != std::string::npos);
  CHECK(with([](Json& d) { d["extra"] = 1; }).find("'extra'") != std::string::npos);
  CHECK(with([](Json& d) { d.erase("d"); }).find("'d'") != std::string::npos);
  CHECK(with([](Json& d) { d["algebra"]["brackets"][0]["i"] = 1; }).find("i < j") != std::string::npos);
  CHECK(with([](Json& d) { d["algebra"]["brackets"][0]["out"][0][1] = 5; }).find("'algebra.brackets[0].out[0][1]'") !=
        std::string::npos);
  CHECK(with([](Json& d) { d["algebra"]["dim"] = -2; }).find("'algebra.dim'") != std::string::npos);
  const Json kernel = Json::parse(R"({ "dimV": 2, "RV": [["0","0"],["0","0"]], "dV": [["0","0"],["0","0"]],
                                       "brackets": [ { "i": 0, "j": 1, "out": [["1", 0]] } ] })");
  CHECK(parse_error([&] { json_io::read_kernel(kernel); }).find("abelian") != std::string::npos);
  CHECK_THROWS_AS(json_io::load("/nonexistent/file.json"), ParseError);
}

TEST_CASE("report documents") {
  MRBLieDerPair p = catalog::example_pair();
  p.weight = 0;
  const Json r = json_io::to_json(validate_pair(p));
  CHECK(r["ok"] == false);
  CHECK(r["violations"][0]["identity"] == "modified-rota-baxter");
  const Representation ab = adjoint_representation(MRBLieDerPair{LieAlgebra(2), 0, Matrix(2, 2), Matrix(2, 2)});
  const Json h = json_io::to_json(cohomology(ab, ComplexKind::mrbld, 2));
  CHECK(h["dimH"] == 12);
  CHECK(h["representatives"].size() == 12);
}
