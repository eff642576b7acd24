// Command-line front end. Exit codes: 0 success, 1 an identity or cocycle
// condition fails, 2 malformed input or flags.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mrbld/json_io.hpp"
#include "mrbld/paper_check.hpp"

using namespace mrbld;
using json_io::Json;

namespace {

enum Exit { ok = 0, violated = 1, malformed = 2 };

struct Options {
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  std::size_t degree = 2;
  std::size_t order = 1;
  std::string complex = "mrbld";
  std::string format = "text";
  std::string input;
  std::string second;
  std::string third;
  std::string fourth;
  std::string rep = "adjoint";
};

bool as_json(const Options& o) { return o.format == "json"; }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string vec(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

void print_report(const ValidationReport& report) {
  for (const auto& v : report.violations) {
    std::cout << "  " << v.identity << " at [";
    for (std::size_t i = 0; i < v.indices.size(); ++i) std::cout << (i ? "," : "") << v.indices[i];
    std::cout << "]: " << vec(v.lhs) << " != " << vec(v.rhs) << "\n";
  }
}

int report_exit(const ValidationReport& report, const Options& o, const std::string& what) {
  if (as_json(o)) {
    print_json(json_io::to_json(report));
  } else {
    std::cout << (report.ok() ? "VALID " : "INVALID ") << what << "\n";
    print_report(report);
  }
  return report.ok() ? ok : violated;
}

Representation load_representation(const Options& o) {
  const Json doc = json_io::load(o.input);
  if (json_io::is_representation_document(doc)) return json_io::read_representation(doc);
  const MRBLieDerPair p = json_io::read_pair(doc);
  if (o.rep == "adjoint") return adjoint_representation(p);
  return json_io::read_representation(json_io::load(o.rep));
}

MRBLieDerPair load_pair(const std::string& path) { return json_io::read_pair(json_io::load(path)); }

DeformationJet load_jet(const Options& o) {
  const Json doc = json_io::load(o.input);
  MRBLieDerPair base;
  if (!doc.is_object() || !doc.contains("base")) {
    if (o.second.empty()) throw ParseError("jet document has no 'base' field and no pair file was given");
    base = load_pair(o.second);
  }
  return json_io::read_jet(doc, base);
}

int cmd_verify(const Options& o) {
  const Json doc = json_io::load(o.input);
  if (json_io::is_representation_document(doc)) {
    const Representation r = json_io::read_representation(doc);
    check_shapes(r);
    const ValidationReport pair = validate_pair(r.pair);
    if (!pair.ok()) return report_exit(pair, o, "pair");
    return report_exit(validate_representation(r), o, "representation");
  }
  const MRBLieDerPair p = json_io::read_pair(doc);
  check_shapes(p);
  return report_exit(validate_pair(p), o, "pair");
}

int cmd_cohomology(const Options& o) {
  const auto kind = parse_complex_kind(o.complex);
  if (!kind) throw ParseError("flag '--complex': expected ce, mrbo, mrbla or mrbld");
  const Representation r = load_representation(o);
  const ValidationReport report = validate_representation(r);
  if (!report.ok()) return report_exit(report, o, "representation");
  const CohomologyResult res = cohomology(r, *kind, o.degree);
  if (as_json(o)) {
    print_json(json_io::to_json(res));
  } else {
    std::cout << "complex " << to_string(res.kind) << " degree " << res.degree << "\n"
              << "dimZ " << res.dimZ << "\ndimB " << res.dimB << "\ndimH " << res.dimH << "\n";
    for (std::size_t k = 0; k < res.representatives.size(); ++k)
      std::cout << "representative " << k << " " << vec(flatten(res.representatives[k])) << "\n";
  }
  return ok;
}

int cmd_deform_check(const Options& o) {
  const DeformationJet j = load_jet(o);
  check_shapes(j);
  if (o.order < 1 || o.order > j.order) throw DegreeOutOfRange("flag '--order': must lie in 1.." + std::to_string(j.order));
  ValidationReport report;
  for (std::size_t n = 1; n <= o.order; ++n) report.append(check_order(j, n));
  return report_exit(report, o, "jet up to order " + std::to_string(o.order));
}

int cmd_deform_infinitesimal(const Options& o) {
  const DeformationJet j = load_jet(o);
  check_shapes(j);
  try {
    const Infinitesimal inf = infinitesimal(j);
    if (as_json(o)) {
      print_json({{"infinitesimal", json_io::to_json(to_slots(inf.quad))},
                  {"cocycle", inf.verdict.cocycle},
                  {"defect", json_io::to_json(inf.verdict.defect)}});
    } else {
      std::cout << (inf.verdict.cocycle ? "COCYCLE" : "NOT A COCYCLE") << "\n"
                << "infinitesimal " << vec(flatten(to_slots(inf.quad))) << "\n";
    }
    return inf.verdict.cocycle ? ok : violated;
  } catch (const OrderOneFails& e) {
    return report_exit(e.report, o, "jet at order 1");
  }
}

int cmd_deform_rigidity(const Options& o) {
  const MRBLieDerPair p = load_pair(o.input);
  const ValidationReport report = validate_pair(p);
  if (!report.ok()) return report_exit(report, o, "pair");
  const RigidityReport r = rigidity_report(p);
  if (as_json(o)) {
    Json cands = Json::array();
    for (const auto& q : r.candidates) cands.push_back(json_io::to_json(to_slots(q)));
    print_json({{"dimH2", r.dimH2}, {"rigidByCriterion", r.rigid_by_criterion}, {"candidates", cands}});
  } else {
    std::cout << "dimH2 " << r.dimH2 << "\n"
              << (r.rigid_by_criterion ? "rigid: H2 vanishes" : "criterion inconclusive: H2 is nonzero") << "\n";
  }
  return ok;
}

int cmd_extend_build(const Options& o) {
  const MRBLieDerPair p = load_pair(o.input);
  const VData v = json_io::read_kernel(json_io::load(o.second));
  const CocycleTriple t = json_io::read_triple(json_io::load(o.third), p.dim(), v.dimV);
  try {
    const ExtensionPresentation x = build_extension(p, v, t);
    print_json(as_json(o) ? json_io::to_json(x) : json_io::to_json(x.total));
    return ok;
  } catch (const NotCocycle& e) {
    if (as_json(o))
      print_json({{"cocycle", false}, {"defect", json_io::to_json(e.defect)}});
    else
      std::cout << "NOT A COCYCLE\ndefect " << vec(flatten(e.defect)) << "\n";
    return violated;
  }
}

int cmd_extend_extract(const Options& o) {
  const ExtensionPresentation x = json_io::read_presentation(json_io::load(o.input));
  const ValidationReport report = validate_extension(x);
  if (!report.ok()) return report_exit(report, o, "extension");
  print_json(json_io::to_json(extract_cocycle(x)));
  return ok;
}

int cmd_extend_classify(const Options& o) {
  const MRBLieDerPair p = load_pair(o.input);
  const VData v = json_io::read_kernel(json_io::load(o.second));
  const CocycleTriple t1 = json_io::read_triple(json_io::load(o.third), p.dim(), v.dimV);
  const CocycleTriple t2 = json_io::read_triple(json_io::load(o.fourth), p.dim(), v.dimV);
  try {
    const ClassifyVerdict verdict = classify(p, v, t1, t2);
    if (as_json(o)) {
      print_json(json_io::to_json(verdict));
    } else {
      std::cout << (verdict.equivalent ? "EQUIVALENT" : "NOT EQUIVALENT") << "\n";
      if (verdict.witness)
        for (std::size_t r = 0; r < verdict.witness->rows(); ++r) std::cout << "witness " << vec(verdict.witness->row(r)) << "\n";
    }
    return ok;
  } catch (const NotCocycle& e) {
    std::cout << "NOT A COCYCLE: " << e.what() << "\n";
    return violated;
  }
}

int cmd_induce(const Options& o) {
  const Json doc = json_io::load(o.input);
  if (json_io::is_representation_document(doc)) {
    print_json(json_io::to_json(induced_representation(json_io::read_representation(doc))));
  } else {
    print_json(json_io::to_json(induced_pair(json_io::read_pair(doc))));
  }
  return ok;
}

int cmd_semidirect(const Options& o) {
  print_json(json_io::to_json(semidirect_product(load_representation(o))));
  return ok;
}

int cmd_paper_check(const Options& o) {
  const PaperCheckReport report = paper_check(o.seed, o.trials);
  if (as_json(o)) {
    Json claims = Json::array();
    for (const auto& c : report.claims) claims.push_back({{"claim", c.claim}, {"status", to_string(c.status)}, {"detail", c.detail}});
    print_json({{"seed", report.seed}, {"trials", report.trials}, {"claims", claims}});
  } else {
    std::cout << report.text();
  }
  return report.ok() ? ok : violated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modified Rota-Baxter LieDer pairs: validation, cohomology, deformations and extensions"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    common(cmd);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };

  CLI::App* verify = leaf(&app, "verify", "Validate a pair or representation document", cmd_verify);
  verify->add_option("document", o.input)->required()->check(CLI::ExistingFile);

  CLI::App* coh = leaf(&app, "cohomology", "Cohomology of a pair or representation document", cmd_cohomology);
  coh->add_option("document", o.input)->required()->check(CLI::ExistingFile);
  coh->add_option("--rep", o.rep, "'adjoint' or a representation document for a pair document");
  coh->add_option("--complex", o.complex, "ce, mrbo, mrbla or mrbld");
  coh->add_option("--degree", o.degree, "Cohomological degree");

  CLI::App* deform = app.add_subcommand("deform", "Deformation jets");
  deform->require_subcommand(1);
  CLI::App* dcheck = leaf(deform, "check", "Check the deformation equations up to --order", cmd_deform_check);
  dcheck->add_option("jet", o.input)->required()->check(CLI::ExistingFile);
  dcheck->add_option("pair", o.second, "Base pair when the jet has no 'base'")->check(CLI::ExistingFile);
  dcheck->add_option("--order", o.order, "Highest order to check");
  CLI::App* dinf = leaf(deform, "infinitesimal", "Infinitesimal of an order-1 consistent jet", cmd_deform_infinitesimal);
  dinf->add_option("jet", o.input)->required()->check(CLI::ExistingFile);
  dinf->add_option("pair", o.second, "Base pair when the jet has no 'base'")->check(CLI::ExistingFile);
  CLI::App* drig = leaf(deform, "rigidity", "Second cohomology with adjoint coefficients", cmd_deform_rigidity);
  drig->add_option("pair", o.input)->required()->check(CLI::ExistingFile);

  CLI::App* extend = app.add_subcommand("extend", "Abelian extensions");
  extend->require_subcommand(1);
  CLI::App* ebuild = leaf(extend, "build", "Extension from a cocycle triple", cmd_extend_build);
  ebuild->add_option("pair", o.input)->required()->check(CLI::ExistingFile);
  ebuild->add_option("kernel", o.second)->required()->check(CLI::ExistingFile);
  ebuild->add_option("triple", o.third)->required()->check(CLI::ExistingFile);
  CLI::App* eext = leaf(extend, "extract", "Cocycle triple of an extension presentation", cmd_extend_extract);
  eext->add_option("presentation", o.input)->required()->check(CLI::ExistingFile);
  CLI::App* eclass = leaf(extend, "classify", "Decide whether two triples give equivalent extensions", cmd_extend_classify);
  eclass->add_option("pair", o.input)->required()->check(CLI::ExistingFile);
  eclass->add_option("kernel", o.second)->required()->check(CLI::ExistingFile);
  eclass->add_option("first", o.third)->required()->check(CLI::ExistingFile);
  eclass->add_option("second", o.fourth)->required()->check(CLI::ExistingFile);

  CLI::App* induce = leaf(&app, "induce", "Induced pair or representation", cmd_induce);
  induce->add_option("document", o.input)->required()->check(CLI::ExistingFile);

  CLI::App* semi = leaf(&app, "semidirect", "Semidirect product with a representation", cmd_semidirect);
  semi->add_option("document", o.input)->required()->check(CLI::ExistingFile);
  semi->add_option("--rep", o.rep, "'adjoint' or a representation document for a pair document");

  CLI::App* check = leaf(&app, "paper-check", "Check every executable claim on random instances", cmd_paper_check);
  check->add_option("--seed", o.seed, "Random seed");
  check->add_option("--trials", o.trials, "Random instances per claim")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return malformed;
  }

  try {
    return action(o);
  } catch (const ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
  } catch (const DimensionMismatch& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
  } catch (const DegreeOutOfRange& e) {
    std::cerr << "DegreeOutOfRange: " << e.what() << "\n";
  } catch (const InvalidPair& e) {
    std::cerr << "invalid pair: " << e.what() << "\n";
    return violated;
  } catch (const InvalidRepresentation& e) {
    std::cerr << "invalid representation: " << e.what() << "\n";
    return violated;
  } catch (const InvalidExtension& e) {
    std::cerr << "invalid extension: " << e.what() << "\n";
    return violated;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return malformed;
}
