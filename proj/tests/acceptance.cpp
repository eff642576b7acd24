// Acceptance criteria, one line each. Exit status is nonzero if any fails.

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mrbld/deformation.hpp"
#include "mrbld/extension.hpp"
#include "mrbld/paper_check.hpp"
#include "mrbld/phi_calibration.hpp"
#include "mrbld/random_instances.hpp"

using namespace mrbld;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts checks and remembers the first failure.
struct Counter {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;
  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures == 0) return {true, summary + " (" + std::to_string(checks) + " exact checks)"};
    return {false, std::to_string(failures) + "/" + std::to_string(checks) + " checks fail; first: " + first};
  }
};

// At least five random valid pairs, each with its adjoint and a random
// representation.
std::vector<Representation> suite(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Representation> out;
  for (int k = 0; k < 6; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    out.push_back(adjoint_representation(p));
    out.push_back(random_representation(rng, p));
  }
  return out;
}

CocycleTriple D1(const Representation& tr, const Matrix& h) {
  const QuadCochain q = D_mrbld(tr, QuadCochain{1, Cochain::from_matrix(h), {}, {}, {}});
  return {q.f, q.g, q.h};
}

Outcome criterion1() {
  Counter c;
  const MRBLieDerPair p = catalog::example_pair();
  c(validate_pair(p).ok(), "example instance invalid");
  // Per object: R and d each have entries whose +1 perturbation fails; the
  // weight has one entry. R(0,0) and d(1,1) are the free parameters of the
  // instance family R = diag(a, 1), d = diag(0, b) and stay valid.
  std::vector<std::string> failing_R, failing_d, free;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t k = 0; k < 2; ++k) {
      const std::string at = "(" + std::to_string(r) + "," + std::to_string(k) + ")";
      MRBLieDerPair q = p;
      q.R(r, k) += 1;
      (validate_pair(q).ok() ? free : failing_R).push_back("R" + at);
      q = p;
      q.d(r, k) += 1;
      (validate_pair(q).ok() ? free : failing_d).push_back("d" + at);
    }
  MRBLieDerPair q = p;
  q.weight += 1;
  c(!validate_pair(q).ok(), "weight + 1 validates");
  c(!failing_R.empty(), "no failing perturbation of R");
  c(!failing_d.empty(), "no failing perturbation of d");
  c(free == std::vector<std::string>{"R(0,0)", "d(1,1)"}, "unexpected set of valid perturbations");
  std::string f;
  for (const auto& s : free) f += (f.empty() ? "" : ", ") + s;
  return c.outcome("valid; weight+1 fails, " + std::to_string(failing_R.size()) + "/4 R-entries and " +
                   std::to_string(failing_d.size()) + "/4 d-entries fail; " + f +
                   " stay valid as free parameters a11, a22 of the family");
}

Outcome cochain_suite(const std::function<bool(const Representation&, const Cochain&)>& check, std::uint64_t seed,
                      const std::string& summary) {
  Counter c;
  Rng rng(seed);
  for (const Representation& r : suite(seed))
    for (std::size_t n = 0; n <= 3; ++n)
      for (int k = 0; k < 50; ++k)
        c(check(r, random_cochain(rng, n, r.pair.dim(), r.dimV)), "degree " + std::to_string(n));
  return c.outcome(summary);
}

Outcome criterion2() {
  return cochain_suite(
      [](const Representation& r, const Cochain& f) {
        return delta_ce(r, delta_ce(r, f)).is_zero() && delta_mrbo(r, delta_mrbo(r, f)).is_zero();
      },
      2, "delta_CE^2 = delta_mRBO^2 = 0, 50 cochains per degree 0..3 on 12 representations of 6 pairs");
}

Outcome criterion3() {
  return cochain_suite(
      [](const Representation& r, const Cochain& f) { return delta_mrbo(r, f) == delta_ce(induced_representation(r), f); },
      3, "delta_mRBO = delta_CE of the induced data on the same suite");
}

Outcome criterion4() {
  Counter c;
  Rng rng(4);
  std::map<std::string, std::size_t> seen;
  for (const Representation& r : suite(4))
    for (std::size_t n = 0; n <= 2; ++n)
      for (const IdentityCheck& check : verify_chain_maps(r, n, 5, rng.next())) {
        c(check.holds, check.identity + " at degree " + std::to_string(n));
        ++seen[check.identity];
      }
  c(seen.size() == 5, "missing identities");
  const std::uint64_t seed = 0;
  const PhiCalibration cal = calibrate_phi(Rational(-1), 3, seed);
  const bool published = !cal.verbatim_certified && cal.table && *cal.table == phi_table(PhiConvention::corrected, -1, 3);
  c(cal.verbatim_certified || published, "calibration neither certifies nor publishes a table");
  const PaperCheckReport report = paper_check(seed, 1);
  std::string finding;
  for (const auto& v : report.claims)
    if (v.claim == "phi-even-coefficients") finding = to_string(v.status) + " " + v.claim + ": " + v.detail;
  c(finding.rfind("FINDING", 0) == 0 || (cal.verbatim_certified && finding.rfind("PASS", 0) == 0), "no FINDING line");
  c(finding.find("seed " + std::to_string(seed)) != std::string::npos || cal.verbatim_certified, "FINDING lacks the seed");
  return c.outcome("commutation and chain-map identities hold with the calibrated table; " +
                   std::string(cal.verbatim_certified ? "verbatim table certified" : "verbatim table rejected, corrected table published") +
                   "; finding line: \"" + finding.substr(0, 60) + "...\"");
}

Outcome criterion5() {
  Counter c;
  Rng rng(5);
  for (const Representation& r : suite(5))
    for (ComplexKind kind : {ComplexKind::mrbla, ComplexKind::mrbld})
      for (std::size_t n = 1; n <= 3; ++n)
        for (int k = 0; k < 3; ++k) {
          const GradedCochain x = unflatten(r, kind, n, random_vector(rng, space_dim(r, kind, n)));
          c(is_zero(apply_coboundary(r, kind, n + 1, apply_coboundary(r, kind, n, x))),
            to_string(kind) + " at degree " + std::to_string(n));
        }
  return c.outcome("partial_mRBLA^2 = D_mRBLD^2 = 0 at degrees 1..3");
}

Outcome criterion6() {
  const Representation r = adjoint_representation(MRBLieDerPair{LieAlgebra(2), 0, Matrix(2, 2), Matrix(2, 2)});
  const std::size_t h2 = cohomology(r, ComplexKind::mrbld, 2).dimH, h1 = cohomology(r, ComplexKind::ce, 1).dimH;
  return {h2 == 12 && h1 == 4, "dim H2_mRBLD = " + std::to_string(h2) + ", dim H1_CE = " + std::to_string(h1)};
}

Outcome criterion7() {
  Counter c;
  Rng rng(7);
  for (int k = 0; k < 24; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    const Representation adj = adjoint_representation(p);
    const Matrix m = operator_matrix(adj, ComplexKind::mrbld, 2);
    const std::size_t embedded = nullspace_basis(m.block(0, 0, m.rows(), m.cols() - adj.dimV)).size();
    c(nullspace_basis(order1_system(p)).size() == embedded, "nullspace dimension");
    const DeformationJet j = sample_order1_jet(rng, p);
    c(check_order(j, 1).ok() && infinitesimal(j).verdict.cocycle, "infinitesimal not a cocycle");
  }
  return c.outcome("24 sampled order-1 jets give D^2-cocycles; nullspace dimension = dim of s=0 cocycles");
}

Outcome criterion8() {
  Counter c;
  Rng rng(8);
  for (int k = 0; k < 24; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    const DeformationJet j = sample_order1_jet(rng, p);
    const EquivalenceJet e{{random_matrix(rng, p.dim(), p.dim(), -3, 3)}};
    const QuadCochain diff_expected = D_mrbld(adjoint_representation(p), QuadCochain{1, Cochain::from_matrix(e.psi[0]), {}, {}, {}});
    const QuadCochain a = infinitesimal(j).quad, b = infinitesimal(apply_equivalence(j, e)).quad;
    c(to_slots(b) - to_slots(a) == to_slots(diff_expected), "difference is not D^1(psi_1)");
  }
  return c.outcome("24 jets: infinitesimal difference = D^1(psi_1)");
}

Outcome criterion9() {
  Counter c;
  Rng rng(9);
  std::size_t cocycles = 0, forced = 0, non_cocycles = 0;
  for (int k = 0; k < 24; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    const VData v = random_kernel(rng);
    const Representation tr = trivial_coefficients(p, v);
    const CocycleTriple t = random_cocycle_triple(rng, p, v);
    c(validate_extension(build_extension(p, v, t)).ok(), "cocycle builds an invalid extension");
    ++cocycles;
    const CocycleTriple u = random_triple(rng, p.dim(), v.dimV);
    const bool valid = validate_extension(force_build(p, v, u)).ok();
    const bool cocycle = is_cocycle(tr, ComplexKind::mrbld, 2, u.slots()).cocycle;
    if (valid) {
      ++forced;
      c(cocycle, "validating quadruple with non-cocycle triple");
    }
    if (!cocycle) {
      ++non_cocycles;
      bool build_failed = false;
      try {
        build_extension(p, v, u);
      } catch (const NotCocycle&) {
        build_failed = true;
      }
      c(!valid && build_failed, "non-cocycle passes");
    }
    // Validating force-built quadruples from cocycles, read back through extraction.
    const ExtensionPresentation x = force_build(p, v, t);
    if (validate_extension(x).ok()) {
      ++forced;
      c(is_cocycle(tr, ComplexKind::mrbld, 2, extract_cocycle(x).slots()).cocycle, "extracted triple not a cocycle");
    }
  }
  c(cocycles >= 20 && forced >= 20 && non_cocycles >= 20, "too few triples on a side");
  return c.outcome(std::to_string(cocycles) + " cocycles build, " + std::to_string(forced) +
                   " validating quadruples give cocycles, " + std::to_string(non_cocycles) + " non-cocycles fail both");
}

Outcome criterion10() {
  Counter c;
  Rng rng(10);
  for (int k = 0; k < 20; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    const VData v = random_kernel(rng);
    const Representation tr = trivial_coefficients(p, v);
    const CocycleTriple t = random_cocycle_triple(rng, p, v);
    const ExtensionPresentation x = build_extension(p, v, t);
    c(extract_cocycle(x) == t, "extract after build");
    const Matrix h = random_matrix(rng, v.dimV, p.dim(), -2, 2);
    const CocycleTriple shifted = extract_cocycle(with_section_shift(x, h));
    c(shifted == t + D1(tr, h), "section change");
    const ClassifyVerdict verdict = classify(p, v, shifted, t);
    c(verdict.equivalent && verdict.witness && D1(tr, *verdict.witness) == shifted - t, "witness");
  }
  const MRBLieDerPair ab{LieAlgebra(2), 0, Matrix(2, 2), Matrix(2, 2)};
  const VData v{2, Matrix(2, 2), Matrix(2, 2), LieAlgebra(2)};
  const Representation tr = trivial_coefficients(ab, v);
  const CocycleTriple t = cocycle_triple_basis(ab, v).front();
  c(!coboundary_preimage(tr, ComplexKind::mrbld, 2, t.slots()).has_value(), "benchmark representative is a coboundary");
  c(!classify(ab, v, t, CocycleTriple::zero(2, 2)).equivalent, "not separated from zero");
  return c.outcome("extract o build = id, section change = D^1(h), witnesses recovered, benchmark class separated from 0");
}

Outcome criterion11() {
  Counter c;
  Rng rng(11);
  for (long lambda : {0L, 1L, -1L, 2L, -2L})
    for (int k = 0; k < 8; ++k) {
      const RotaBaxterTriple t = random_rota_baxter(rng, lambda);
      const MRBLieDerPair p = from_rota_baxter(t.algebra, t.T, t.d, t.lambda);
      c(validate_pair(p).ok() && p.weight == Rational(-lambda * lambda), "2T + lambda Id invalid");
      const Matrix back = Rational(1, 2) * (p.R - t.lambda * Matrix::identity(p.dim()));
      c(back == t.T && validate_rota_baxter(t.algebra, back, p.d, t.lambda).ok(), "roundtrip");
    }
  return c.outcome("2T + lambda Id validates at weight -lambda^2 and inverts, lambda in {0, +-1, +-2}");
}

Outcome criterion12() {
  Counter c;
  std::vector<std::pair<std::string, std::string>> reference;
  for (std::uint64_t seed : {0, 1, 2, 3, 4}) {
    const PaperCheckReport r = paper_check(seed, 3);
    std::vector<std::pair<std::string, std::string>> verdicts;
    for (const auto& v : r.claims) verdicts.emplace_back(v.claim, to_string(v.status));
    if (reference.empty()) reference = verdicts;
    c(verdicts == reference, "verdicts differ at seed " + std::to_string(seed));
    c(r.ok(), "a claim fails at seed " + std::to_string(seed));
  }
  std::size_t findings = 0;
  for (const auto& v : reference) findings += v.second == "FINDING";
  return c.outcome(std::to_string(reference.size()) + " claims, " + std::to_string(findings) +
                   " FINDING, identical verdicts over seeds 0..4");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"example instance and perturbations", criterion1},
      {"delta squared is zero", criterion2},
      {"operator coboundary equals induced CE coboundary", criterion3},
      {"chain-map suite and phi calibration", criterion4},
      {"combined complexes square to zero", criterion5},
      {"abelian benchmark", criterion6},
      {"order-1 jets give cocycles", criterion7},
      {"equivalent jets differ by a coboundary", criterion8},
      {"extensions and cocycles in both directions", criterion9},
      {"classification of extensions", criterion10},
      {"Rota-Baxter roundtrip", criterion11},
      {"paper-check determinism", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
