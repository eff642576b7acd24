#include "mrbld/paper_check.hpp"

#include <functional>
#include <sstream>

#include "mrbld/deformation.hpp"
#include "mrbld/extension.hpp"
#include "mrbld/phi_calibration.hpp"
#include "mrbld/random_instances.hpp"

namespace mrbld {

namespace {

// Tallies one claim over its trials and keeps the first failure.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures++ == 0) first_failure = what;
  }
  ClaimVerdict verdict(const std::string& claim, const std::string& subject) const {
    if (failures == 0) return {claim, ClaimStatus::pass, std::to_string(checks) + " " + subject + " checked"};
    return {claim, ClaimStatus::fail,
            std::to_string(failures) + " of " + std::to_string(checks) + " " + subject + " fail; first: " + first_failure};
  }
};

std::string str(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + "]";
}

Representation random_rep(Rng& rng) { return random_representation(rng, random_pair(rng)); }

// The instance belongs to the family R = diag(a, 1), d = diag(0, b) with a
// and b free, so +1 on R(0,0) or d(1,1) must stay valid and every other
// single-entry perturbation must fail.
ClaimVerdict example_pair_claim() {
  Tally t;
  const MRBLieDerPair p = catalog::example_pair();
  t.expect(validate_pair(p).ok(), "the example instance");
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      const std::string at = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
      MRBLieDerPair q = p;
      q.R(r, c) += 1;
      const bool free_R = r == 0 && c == 0;
      t.expect(validate_pair(q).ok() == free_R, "R" + at + " + 1");
      q = p;
      q.d(r, c) += 1;
      const bool free_d = r == 1 && c == 1;
      t.expect(validate_pair(q).ok() == free_d, "d" + at + " + 1");
    }
  MRBLieDerPair q = p;
  q.weight += 1;
  t.expect(!validate_pair(q).ok(), "weight + 1");
  return t.verdict("example-pair", "instances");
}

ClaimVerdict adjoint_claim(Rng& rng, std::size_t trials) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    t.expect(validate_representation(adjoint_representation(p)).ok(), "adjoint representation");
  }
  return t.verdict("adjoint-representation", "pairs");
}

ClaimVerdict rota_baxter_claim(Rng& rng, std::size_t trials) {
  Tally t;
  for (long lambda = -2; lambda <= 2; ++lambda)
    for (std::size_t k = 0; k < trials; ++k) {
      const RotaBaxterTriple rb = random_rota_baxter(rng, lambda);
      const MRBLieDerPair p = from_rota_baxter(rb.algebra, rb.T, rb.d, rb.lambda);
      t.expect(validate_pair(p).ok() && p.weight == -lambda * lambda, "2T + lambda Id at lambda " + std::to_string(lambda));
      Matrix T = rb.T;
      T(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(T.rows()) - 1)),
        static_cast<std::size_t>(rng.uniform(0, static_cast<long>(T.cols()) - 1))) += rng.uniform(1, 2);
      const bool rb_ok = validate_rota_baxter(rb.algebra, T, rb.d, rb.lambda).ok();
      const MRBLieDerPair q{rb.algebra, -rb.lambda * rb.lambda,
                            Rational(2) * T + rb.lambda * Matrix::identity(T.rows()), rb.d};
      t.expect(rb_ok == validate_pair(q).ok(), "perturbed operator at lambda " + std::to_string(lambda));
    }
  return t.verdict("rota-baxter-correspondence", "operators");
}

ClaimVerdict scaled_claim() {
  const Representation r = adjoint_representation(catalog::example_pair());
  const TransformVerdict v = transform_representation(r, TransformMode::scale, 2);
  if (v.claimed_valid) return {"scaled-representation-weight", ClaimStatus::pass, "scaling by 2 validates at weight 2 lambda"};
  return {"scaled-representation-weight", ClaimStatus::finding,
          std::string("scaling by kappa = 2 fails at the stated weight kappa lambda = ") + v.claimed.pair.weight.str() +
              "; it " + (v.alternative_valid ? "validates" : "also fails") + " at kappa^2 lambda = " +
              v.alternative->pair.weight.str()};
}

ClaimVerdict reflected_claim() {
  const Representation r = adjoint_representation(catalog::example_pair());
  const TransformVerdict v = transform_representation(r, TransformMode::reflect);
  if (v.claimed_valid) return {"reflected-representation", ClaimStatus::pass, "-lambda Id - R validates at the same weight"};
  std::string detail = "(-lambda Id - R, -lambda Id - R_V) fails at the unchanged weight " + r.pair.weight.str();
  if (v.alternative)
    detail += std::string("; it ") + (v.alternative_valid ? "validates" : "still fails") + " at the fitted weight " +
              v.alternative->pair.weight.str();
  Representation neg = r;
  neg.pair.R = Rational(-1) * r.pair.R;
  neg.RV = Rational(-1) * r.RV;
  detail += std::string("; (-R, -R_V) ") + (validate_representation(neg).ok() ? "validates" : "fails") +
            " at the unchanged weight";
  return {"reflected-representation", ClaimStatus::finding, detail};
}

ClaimVerdict semidirect_claim(Rng& rng, std::size_t trials) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const Representation r = random_rep(rng);
    t.expect(validate_pair(semidirect_product(r)).ok(), "semidirect product");
  }
  return t.verdict("semidirect-product", "representations");
}

ClaimVerdict induced_claim(Rng& rng, std::size_t trials) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const Representation r = random_rep(rng);
    t.expect(validate_pair(induced_pair(r.pair)).ok(), "induced pair");
    t.expect(validate_representation(induced_representation(r)).ok(), "induced representation");
  }
  return t.verdict("induced-structures", "instances");
}

// Applies `check` to random cochains of degrees 0..3 over random representations.
ClaimVerdict cochain_claim(Rng& rng, std::size_t trials, const std::string& name,
                           const std::function<bool(const Representation&, const Cochain&)>& check) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const Representation r = rng.coin() ? adjoint_representation(random_pair(rng)) : random_rep(rng);
    for (std::size_t n = 0; n <= 3; ++n)
      t.expect(check(r, random_cochain(rng, n, r.pair.dim(), r.dimV)), "degree " + std::to_string(n));
  }
  return t.verdict(name, "cochains");
}

ClaimVerdict phi_table_claim(std::uint64_t seed) {
  const PhiCalibration cal = calibrate_phi(Rational(-1), 3, seed);
  if (cal.verbatim_certified)
    return {"phi-even-coefficients", ClaimStatus::pass, "verbatim coefficients satisfy the chain-map identity"};
  std::ostringstream os;
  os << "verbatim coefficients fail the chain-map identity at weight " << cal.weight.str()
     << "; with R_V on every correction term no table works (" << (cal.verbatim_shape_solvable ? "solvable" : "unsolvable")
     << "); the identity leaves a " << cal.full_solution_dim << "-parameter family; ";
  if (cal.table) {
    os << "unique parity-shape table plain = " << str(cal.table->plain) << ", composed = " << str(cal.table->composed)
       << " (solving seed " << seed << ", " << cal.equations << " equations), "
       << (*cal.table == phi_table(PhiConvention::corrected, cal.weight, 3) ? "equal to" : "different from")
       << " the corrected convention";
  } else {
    os << "no parity-shape table exists";
  }
  return {"phi-even-coefficients", ClaimStatus::finding, os.str()};
}

ClaimVerdict chain_map_claim(Rng& rng, std::size_t trials, bool phi_only) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const Representation r = rng.coin() ? adjoint_representation(random_pair(rng)) : random_rep(rng);
    for (std::size_t n = 0; n <= 2; ++n)
      for (const IdentityCheck& c : verify_chain_maps(r, n, 2, rng.next()))
        if ((c.identity == "phi-chain-map") == phi_only) t.expect(c.holds, c.identity + " at degree " + std::to_string(n));
  }
  return t.verdict(phi_only ? "phi-chain-map" : "delta-commutation", "identity instances");
}

ClaimVerdict square_zero_claim(Rng& rng, std::size_t trials, ComplexKind kind) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const Representation r = rng.coin() ? adjoint_representation(random_pair(rng)) : random_rep(rng);
    for (std::size_t n = 1; n <= 2; ++n) {
      const std::size_t size = space_dim(r, kind, n);
      const GradedCochain x = unflatten(r, kind, n, random_vector(rng, size));
      const GradedCochain y = apply_coboundary(r, kind, n, x);
      t.expect(is_zero(apply_coboundary(r, kind, n + 1, y)), "degree " + std::to_string(n));
    }
  }
  return t.verdict(to_string(kind) + "-square-zero", "cochains");
}

ClaimVerdict abelian_benchmark_claim() {
  const MRBLieDerPair p{LieAlgebra(2), 0, Matrix(2, 2), Matrix(2, 2)};
  const Representation r = adjoint_representation(p);
  const std::size_t h2 = cohomology(r, ComplexKind::mrbld, 2).dimH;
  const std::size_t h1 = cohomology(r, ComplexKind::ce, 1).dimH;
  const std::string dims = "dim H2_mRBLD = " + std::to_string(h2) + ", dim H1_CE = " + std::to_string(h1);
  return {"abelian-benchmark", h2 == 12 && h1 == 4 ? ClaimStatus::pass : ClaimStatus::fail, dims};
}

std::size_t slot_embedded_cocycle_dim(const Representation& r) {
  const Matrix m = operator_matrix(r, ComplexKind::mrbld, 2);
  return nullspace_basis(m.block(0, 0, m.rows(), m.cols() - r.dimV)).size();
}

ClaimVerdict infinitesimal_claim(Rng& rng, std::size_t trials) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    t.expect(nullspace_basis(order1_system(p)).size() == slot_embedded_cocycle_dim(adjoint_representation(p)),
             "order-1 solution space dimension");
    t.expect(infinitesimal(sample_order1_jet(rng, p)).verdict.cocycle, "infinitesimal cocycle");
  }
  return t.verdict("infinitesimal-cocycle", "jets");
}

EquivalenceJet random_equivalence(Rng& rng, std::size_t dim, std::size_t order) {
  EquivalenceJet e;
  for (std::size_t i = 0; i < order; ++i) e.psi.push_back(random_matrix(rng, dim, dim, -2, 2));
  return e;
}

ClaimVerdict equivalence_claim(Rng& rng, std::size_t trials) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    const DeformationJet j = sample_order1_jet(rng, p);
    const EquivalenceJet e = random_equivalence(rng, p.dim(), 1);
    t.expect(infinitesimals_cohomologous(j, apply_equivalence(j, e), e), "equivalent jets");
  }
  return t.verdict("equivalent-infinitesimals", "jets");
}

// Order-1 jets whose infinitesimal is a coboundary y lose their order-1
// term under psi_1 = -y. Besides sampled jets, trivial jets psi . 0 are
// used so that the coboundary case always occurs.
ClaimVerdict trivialization_claim(Rng& rng, std::size_t trials) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    const Representation adj = adjoint_representation(p);
    const bool h2_zero = cohomology(adj, ComplexKind::mrbld, 2).dimH == 0;
    const DeformationJet trivial = apply_equivalence(DeformationJet::zero(p, 1), random_equivalence(rng, p.dim(), 1));
    for (const DeformationJet& j : {sample_order1_jet(rng, p), trivial}) {
      const auto pre = coboundary_preimage(adj, ComplexKind::mrbld, 2, to_slots(infinitesimal(j).quad));
      if (!pre) {
        t.expect(!h2_zero && !(j == trivial), "coboundary infinitesimal without a preimage");
        continue;
      }
      const DeformationJet j2 = apply_equivalence(j, {{Rational(-1) * (*pre)[0].to_matrix()}});
      t.expect(j2.mu[0].is_zero() && j2.R[0].is_zero() && j2.d[0].is_zero(), "order-1 term survives");
    }
  }
  return t.verdict("trivializable-infinitesimals", "jets");
}

ClaimVerdict extension_claim(Rng& rng, std::size_t trials, bool from_cocycle) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    const VData v = random_kernel(rng);
    const Representation tr = trivial_coefficients(p, v);
    if (from_cocycle) {
      const CocycleTriple c = random_cocycle_triple(rng, p, v);
      const ExtensionPresentation x = build_extension(p, v, c);
      t.expect(validate_extension(x).ok(), "cocycle gives an invalid extension");
      t.expect(extract_cocycle(x) == c, "extract after build");
    } else {
      const CocycleTriple c = random_triple(rng, p.dim(), v.dimV);
      const bool valid = validate_extension(force_build(p, v, c)).ok();
      const bool cocycle = is_cocycle(tr, ComplexKind::mrbld, 2, c.slots()).cocycle;
      t.expect(valid == cocycle, valid ? "valid extension from a non-cocycle" : "invalid extension from a cocycle");
    }
  }
  return t.verdict(from_cocycle ? "extension-from-cocycle" : "cocycle-from-extension", "triples");
}

ClaimVerdict classification_claim(Rng& rng, std::size_t trials) {
  Tally t;
  for (std::size_t k = 0; k < trials; ++k) {
    const MRBLieDerPair p = random_pair(rng);
    const VData v = random_kernel(rng);
    const Representation tr = trivial_coefficients(p, v);
    const CocycleTriple c = random_cocycle_triple(rng, p, v);
    const Matrix h = random_matrix(rng, v.dimV, p.dim(), -2, 2);
    const QuadCochain dh = D_mrbld(tr, QuadCochain{1, Cochain::from_matrix(h), {}, {}, {}});
    const CocycleTriple shifted = extract_cocycle(with_section_shift(build_extension(p, v, c), h));
    t.expect(shifted == c + CocycleTriple{dh.f, dh.g, dh.h}, "section change");
    const ClassifyVerdict verdict = classify(p, v, shifted, c);
    t.expect(verdict.equivalent, "cohomologous triples not recognised");
  }
  const MRBLieDerPair ab{LieAlgebra(2), 0, Matrix(2, 2), Matrix(2, 2)};
  const VData v{2, Matrix(2, 2), Matrix(2, 2), LieAlgebra(2)};
  const CocycleTriple c = cocycle_triple_basis(ab, v).front();
  t.expect(!classify(ab, v, c, CocycleTriple::zero(2, 2)).equivalent, "abelian benchmark class not separated from zero");
  return t.verdict("extension-classification", "instances");
}

}  // namespace

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::finding: return "FINDING";
  }
  return "?";
}

bool PaperCheckReport::ok() const {
  for (const auto& c : claims)
    if (c.status == ClaimStatus::fail) return false;
  return true;
}

std::string PaperCheckReport::text() const {
  std::string out;
  for (const auto& c : claims) out += to_string(c.status) + " " + c.claim + ": " + c.detail + "\n";
  return out;
}

PaperCheckReport paper_check(std::uint64_t seed, std::size_t trials) {
  if (trials == 0) trials = 1;
  PaperCheckReport report{seed, trials, {}};
  std::uint64_t stream = 0;
  // Each claim draws from its own generator so that claims are independent.
  auto rng = [&] { return Rng(seed * 0x9E3779B97F4A7C15ULL + ++stream); };
  auto add = [&](ClaimVerdict v) { report.claims.push_back(std::move(v)); };

  add(example_pair_claim());
  { Rng r = rng(); add(adjoint_claim(r, trials)); }
  { Rng r = rng(); add(rota_baxter_claim(r, trials)); }
  add(scaled_claim());
  add(reflected_claim());
  { Rng r = rng(); add(semidirect_claim(r, trials)); }
  { Rng r = rng(); add(induced_claim(r, trials)); }
  {
    Rng r = rng();
    add(cochain_claim(r, trials, "ce-square-zero",
                      [](const Representation& rep, const Cochain& f) { return delta_ce(rep, delta_ce(rep, f)).is_zero(); }));
  }
  {
    Rng r = rng();
    add(cochain_claim(r, trials, "mrbo-square-zero", [](const Representation& rep, const Cochain& f) {
      return delta_mrbo(rep, delta_mrbo(rep, f)).is_zero();
    }));
  }
  {
    Rng r = rng();
    add(cochain_claim(r, trials, "mrbo-equals-induced-ce", [](const Representation& rep, const Cochain& f) {
      return delta_mrbo(rep, f) == delta_ce(induced_representation(rep), f);
    }));
  }
  add(phi_table_claim(seed));
  { Rng r = rng(); add(chain_map_claim(r, trials, true)); }
  { Rng r = rng(); add(chain_map_claim(r, trials, false)); }
  { Rng r = rng(); add(square_zero_claim(r, trials, ComplexKind::mrbla)); }
  { Rng r = rng(); add(square_zero_claim(r, trials, ComplexKind::mrbld)); }
  add(abelian_benchmark_claim());
  { Rng r = rng(); add(infinitesimal_claim(r, trials)); }
  { Rng r = rng(); add(equivalence_claim(r, trials)); }
  { Rng r = rng(); add(trivialization_claim(r, trials)); }
  { Rng r = rng(); add(extension_claim(r, trials, true)); }
  { Rng r = rng(); add(extension_claim(r, trials, false)); }
  { Rng r = rng(); add(classification_claim(r, trials)); }
  return report;
}

}  // namespace mrbld
