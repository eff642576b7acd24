#include <doctest.h>

#include "mrbld/paper_check.hpp"

using namespace mrbld;

TEST_CASE("paper-check is deterministic and seed independent in its verdicts") {
  const PaperCheckReport a = paper_check(7, 2);
  const PaperCheckReport b = paper_check(7, 2);
  CHECK(a.text() == b.text());
  const PaperCheckReport c = paper_check(8, 1);
  REQUIRE(a.claims.size() == c.claims.size());
  for (std::size_t i = 0; i < a.claims.size(); ++i) {
    CHECK(a.claims[i].claim == c.claims[i].claim);
    CHECK(a.claims[i].status == c.claims[i].status);
  }
  CHECK(a.ok());
}

TEST_CASE("paper-check findings") {
  const PaperCheckReport r = paper_check(0, 1);
  std::size_t findings = 0;
  for (const auto& c : r.claims) {
    if (c.status != ClaimStatus::finding) continue;
    ++findings;
    INFO(c.claim);
    CHECK((c.claim == "scaled-representation-weight" || c.claim == "reflected-representation" ||
           c.claim == "phi-even-coefficients"));
  }
  CHECK(findings == 3);
  CHECK(r.text().find("FINDING phi-even-coefficients") != std::string::npos);
  CHECK(r.text().find("solving seed 0") != std::string::npos);
  CHECK(paper_check(0, 0).trials == 1);
}
