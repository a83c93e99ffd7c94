#ifndef UNIGEN_CAMPAIGN_HPP
#define UNIGEN_CAMPAIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unigen/catalog.hpp"

namespace unigen {

enum class Check {
  kLemma3,
  kLemma2a,
  kLemma2b,
  kE1Inequalities,
  kIwasawa,
  kEllAdditivity,
  kDSubadditivity,
  kAltFormula,
  kTheorem1Reconcile,
  kOracleDiff,
};

std::string_view to_string(Check c);
std::optional<Check> parse_check(std::string_view name);
std::vector<Check> all_checks();

// Comma-separated names; throws Error on an unknown name.
std::vector<Check> parse_check_list(std::string_view list);

struct CampaignOptions {
  std::vector<Check> checks = all_checks();
  unsigned workers = 1;
  bool slow = false;  // Alt(7) in alt-formula, entries above order 512
  Limits limits;
  // Normal subgroups per group that additivity also verifies through
  // explicitly constructed subgroups and quotients.
  std::size_t explicit_normal_budget = 24;
};

enum class Status { kPass, kFail, kNotApplicable };

struct CheckOutcome {
  Check check;
  Status status = Status::kPass;
  std::string detail;  // witness on failure
};

struct EntryResult {
  std::string label;
  std::uint64_t order = 0;
  std::optional<std::string> skipped;  // reason when the entry could not run
  std::vector<CheckOutcome> outcomes;
  std::optional<GroupMetrics> metrics;
};

struct AltFormulaResult {
  unsigned n = 0;
  int computed = 0;
  int expected = 0;
  bool pass() const noexcept { return computed == expected; }
};

struct CampaignReport {
  std::vector<Check> checks;
  std::vector<EntryResult> entries;
  std::vector<AltFormulaResult> alt_formula;

  std::size_t failures() const;
  std::size_t skipped() const;
  // 0 all pass, 1 verification failure, 3 an entry hit a cap.
  int exit_code() const;
  // Byte-identical for any worker count.
  std::string text() const;
};

// Entries above order 512 are dropped unless options.slow.
CampaignReport run_campaign(std::vector<CatalogEntry> const& catalog, CampaignOptions const& options);

// The per-entry work, exposed for tests.
EntryResult verify_entry(CatalogEntry const& entry, CampaignOptions const& options);

// floor(3(n-1)/2) - s_2(n)
int alternating_length_formula(unsigned n);

}  // namespace unigen

#endif  // UNIGEN_CAMPAIGN_HPP
