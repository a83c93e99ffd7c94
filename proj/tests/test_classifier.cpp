#include <doctest.h>

#include "helpers.hpp"
#include "unigen/analysis.hpp"
#include "unigen/classifier.hpp"
#include "unigen/generation.hpp"

using namespace unigen;
using testing::build;

namespace {

ClassificationVerdict verdict_of(std::string const& spec) {
  auto g = build(spec);
  auto lat = SubgroupLattice::enumerate(g);
  return reconcile(g, lat).verdict;
}

}  // namespace

TEST_CASE("verdicts for named groups") {
  CHECK(to_string(verdict_of("C1")) == "ElementaryAbelian(-,0)");
  CHECK(to_string(verdict_of("C5")) == "ElementaryAbelian(5,1)");
  CHECK(to_string(verdict_of("E(3,2)")) == "ElementaryAbelian(3,2)");
  CHECK(to_string(verdict_of("Scalar(3,2,2)")) == "ScalarSemidirect(3,2,2,2)");
  CHECK(to_string(verdict_of("Scalar(5,2,2)")) == "ScalarSemidirect(5,2,2,4)");
  CHECK(to_string(verdict_of("Scalar(7,1,3)")) == "ScalarSemidirect(7,1,3,2)");
  CHECK(to_string(verdict_of("S3")) == "ScalarSemidirect(3,1,2,2)");
  CHECK_FALSE(verdict_of("S4").positive());
  CHECK_FALSE(verdict_of("D4").positive());
  CHECK_FALSE(verdict_of("C4").positive());
  CHECK_FALSE(verdict_of("C6").positive());
  CHECK_FALSE(verdict_of("A4").positive());
  CHECK_FALSE(verdict_of("D5 x C2").positive());
  CHECK_FALSE(verdict_of("Scalar(3,1,2) x C3").positive());
  CHECK(verdict_of("S4").predicted_rank() == -1);
  CHECK(verdict_of("Scalar(5,2,2)").predicted_rank() == 3);
}

TEST_CASE("lazy classification agrees with the full one") {
  for (auto const& e : testing::catalog_upto(48)) {
    CAPTURE(e.label);
    auto g = build_from_spec(e.spec);
    auto lat = SubgroupLattice::enumerate(g);
    CHECK(to_string(classify(g)) == to_string(classify(g, lat, structure_report(g, lat))));
  }
}

TEST_CASE("classifier and behavioral predicate agree; positive groups have d = l") {
  for (auto const& e : testing::catalog_upto(60)) {
    CAPTURE(e.label);
    auto g = build_from_spec(e.spec);
    auto lat = SubgroupLattice::enumerate(g);
    auto r = reconcile(g, lat);
    CHECK(r.agree);
    CHECK(r.witness.empty());
    CHECK(r.verdict.behavioral_agreement);
    if (r.verdict.positive()) {
      CHECK(r.verdict.predicted_rank() == oracle::rank(g));
      CHECK(chain_report(lat).length_ell == r.verdict.predicted_rank());
    }
  }
}

TEST_CASE("verdict records") {
  auto rec = verdict_record("Scalar(5,2,2)", 50, verdict_of("Scalar(5,2,2)"));
  CHECK(rec["spec"] == "Scalar(5,2,2)");
  CHECK(rec["order"] == 50);
  CHECK(rec["verdict"] == "ScalarSemidirect(5,2,2,4)");
  CHECK(rec["p"] == 5);
  CHECK(rec["q"] == 2);
  CHECK(rec["d"] == 3);
  CHECK(rec["lambda"] == 4);
  CHECK(rec["behavioral_agreement"] == true);

  auto trivial = verdict_record("C1", 1, verdict_of("C1"));
  CHECK(trivial["p"].is_null());
  CHECK(trivial["q"].is_null());
  CHECK(trivial["d"] == 0);
  CHECK(trivial["lambda"].is_null());

  auto neg = verdict_record("S4", 24, verdict_of("S4"));
  CHECK(neg["d"].is_null());
  CHECK(neg["kind"] == "NotUniformlyGenerated");
}

TEST_CASE("analysis of S4, C1 and Scalar(3,2,2)") {
  auto s4 = analyze_group("S4", build("S4"));
  CHECK(s4.metrics.d == 2);
  CHECK(s4.metrics.m == 3);
  CHECK(s4.metrics.ell == 4);
  CHECK(s4.metrics.lambda == 3);
  CHECK(s4.metrics.phi_order == 1);
  CHECK(s4.metrics.fit_order == 4);
  CHECK_FALSE(s4.metrics.supersolvable);
  CHECK_FALSE(s4.metrics.verdict.positive());
  CHECK(csv_row(s4).rfind("S4,24,2,3,4,3,1,4,false,false,", 0) == 0);

  auto c1 = analyze_group("C1", build("C1"));
  CHECK(c1.metrics.d == 0);
  CHECK(c1.metrics.m == 0);
  CHECK(c1.metrics.ell == 0);
  CHECK(c1.metrics.lambda == 0);
  CHECK(to_string(c1.metrics.verdict) == "ElementaryAbelian(-,0)");

  auto sc = analyze_group("Scalar(3,2,2)", build("Scalar(3,2,2)"));
  CHECK(sc.metrics.d == 3);
  CHECK(sc.metrics.m == 3);
  CHECK(sc.metrics.ell == 3);
  CHECK(sc.metrics.lambda == 3);
  CHECK(to_string(sc.metrics.verdict) == "ScalarSemidirect(3,2,2,2)");

  CHECK(csv_header() == "spec,order,d,m,ell,lambda,phi_order,fit_order,nilpotent,supersolvable,verdict");
  auto j = to_json(s4, true);
  CHECK(j["longest_chain"].size() == 5);
  CHECK(j["shortest_chain"].size() == 4);
  CHECK(j["classification"]["spec"] == "S4");
}
