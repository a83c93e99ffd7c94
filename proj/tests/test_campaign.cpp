#include <doctest.h>

#include "helpers.hpp"
#include "unigen/campaign.hpp"
#include "unigen/errors.hpp"

using namespace unigen;

TEST_CASE("check names") {
  for (Check c : all_checks()) CHECK(parse_check(to_string(c)) == c);
  CHECK_FALSE(parse_check("lemma4").has_value());
  auto list = parse_check_list("iwasawa, lemma3,iwasawa");
  CHECK(list == std::vector<Check>{Check::kLemma3, Check::kIwasawa});
  CHECK_THROWS_AS(parse_check_list("iwasawa,nope"), Error);
  CHECK(all_checks().size() == 10);
}

TEST_CASE("alternating length formula") {
  CHECK(alternating_length_formula(3) == 1);
  CHECK(alternating_length_formula(4) == 3);
  CHECK(alternating_length_formula(5) == 4);
  CHECK(alternating_length_formula(6) == 5);
  CHECK(alternating_length_formula(7) == 6);
}

TEST_CASE("a small campaign passes and is independent of worker count") {
  CampaignOptions options;
  auto catalog = build_catalog(32);
  auto one = run_campaign(catalog, options);
  options.workers = 3;
  auto three = run_campaign(catalog, options);
  CHECK(one.failures() == 0);
  CHECK(one.skipped() == 0);
  CHECK(one.exit_code() == 0);
  CHECK(one.text() == three.text());
  CHECK(one.entries.size() == catalog.size());
  REQUIRE(one.alt_formula.size() == 4);
  for (auto const& a : one.alt_formula) CHECK(a.pass());
}

TEST_CASE("entries over the cap are skipped with a reason") {
  CampaignOptions options;
  options.checks = {Check::kIwasawa};
  options.limits.order_cap = 10;
  auto report = run_campaign(build_catalog(12), options);
  CHECK(report.failures() == 0);
  CHECK(report.skipped() > 0);
  CHECK(report.exit_code() == 3);
  CHECK(report.text().find("SKIPPED") != std::string::npos);
}

TEST_CASE("per-entry outcomes") {
  CampaignOptions options;
  CatalogEntry s4{parse_spec("S4"), "S4", "builtin", 24, std::nullopt};
  auto r = verify_entry(s4, options);
  CHECK_FALSE(r.skipped.has_value());
  REQUIRE(r.metrics.has_value());
  CHECK(r.metrics->ell == 4);
  CHECK(r.metrics->lambda == 3);
  CHECK(r.metrics->m == 3);
  for (auto const& o : r.outcomes) {
    CAPTURE(to_string(o.check));
    CHECK(o.status != Status::kFail);
    // S4 is not positive, so the positive-only checks do not apply
    if (o.check == Check::kLemma2a || o.check == Check::kLemma2b) CHECK(o.status == Status::kNotApplicable);
  }

  CatalogEntry sc{parse_spec("Scalar(3,2,2)"), "Scalar(3,2,2)", "builtin", 18, std::nullopt};
  for (auto const& o : verify_entry(sc, options).outcomes) CHECK(o.status == Status::kPass);

  CatalogEntry c1{parse_spec("C1"), "C1", "builtin", 1, std::nullopt};
  for (auto const& o : verify_entry(c1, options).outcomes) {
    if (o.check == Check::kLemma3 || o.check == Check::kOracleDiff) CHECK(o.status == Status::kNotApplicable);
    else CHECK(o.status == Status::kPass);
  }
}

TEST_CASE("report text layout") {
  CampaignOptions options;
  options.checks = {Check::kIwasawa, Check::kAltFormula};
  auto text = run_campaign(build_catalog(4), options).text();
  CHECK(text.rfind("unigen verify report\nchecks: iwasawa alt-formula\nentries: 6\n", 0) == 0);
  CHECK(text.find("C4 order=4 | iwasawa=pass\n") != std::string::npos);
  CHECK(text.find("alt-formula A6 ell=5 expected=5 pass\n") != std::string::npos);
  CHECK(text.find("summary: passed=10 failed=0 not_applicable=0 skipped_entries=0\n") != std::string::npos);
}
