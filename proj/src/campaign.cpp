#include "unigen/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "unigen/errors.hpp"
#include "unigen/structure.hpp"

namespace unigen {

namespace {

constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::kLemma3, "lemma3"},
    {Check::kLemma2a, "lemma2a"},
    {Check::kLemma2b, "lemma2b"},
    {Check::kE1Inequalities, "e1-inequalities"},
    {Check::kIwasawa, "iwasawa"},
    {Check::kEllAdditivity, "ell-additivity"},
    {Check::kDSubadditivity, "d-subadditivity"},
    {Check::kAltFormula, "alt-formula"},
    {Check::kTheorem1Reconcile, "theorem1-reconcile"},
    {Check::kOracleDiff, "oracle-diff"},
};

constexpr std::uint64_t kSlowOrder = 512;
constexpr std::uint64_t kOracleOrder = 24;
constexpr int kOracleMaxD = 3;

std::string_view status_text(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "FAIL";
    case Status::kNotApplicable:
      return "n/a";
  }
  return "?";
}

}  // namespace

std::string_view to_string(Check c) {
  for (auto const& [check, name] : kCheckNames)
    if (check == c) return name;
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (auto const& [check, n] : kCheckNames)
    if (n == name) return check;
  return std::nullopt;
}

std::vector<Check> all_checks() {
  std::vector<Check> out;
  for (auto const& [check, name] : kCheckNames) out.push_back(check);
  return out;
}

std::vector<Check> parse_check_list(std::string_view list) {
  std::vector<Check> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view name = list.substr(start, end - start);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (!name.empty()) {
      auto c = parse_check(name);
      if (!c) throw Error("unknown check '" + std::string(name) + "'");
      if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
    }
    start = end + 1;
  }
  // Report order follows the canonical check order.
  std::vector<Check> ordered;
  for (Check c : all_checks())
    if (std::find(out.begin(), out.end(), c) != out.end()) ordered.push_back(c);
  return ordered;
}

int alternating_length_formula(unsigned n) {
  return static_cast<int>(3 * (n - 1) / 2) - static_cast<int>(digit_sum(n, 2));
}

namespace {

// Lazily computed facts about one group, shared by the checks.
class EntryContext {
 public:
  EntryContext(GroupTable g, Limits const& limits)
      : limits_(limits), g_(std::move(g)), lat_(SubgroupLattice::enumerate(g_, limits)),
        profile_(chain_profile(lat_)) {}

  GroupTable const& g() const { return g_; }
  SubgroupLattice const& lat() const { return lat_; }
  ChainProfile const& profile() const { return profile_; }
  Limits const& limits() const { return limits_; }
  int ell() const { return profile_.longest_to_top[lat_.bottom()]; }
  int lambda() const { return profile_.shortest_to_top[lat_.bottom()]; }

  StructureReport const& structure() {
    if (!structure_) structure_ = structure_report(g_, lat_);
    return *structure_;
  }
  MinimalGenerators const& generators() {
    if (!generators_) generators_ = minimal_generators(g_, lat_);
    return *generators_;
  }
  MaxIndependent const& independent() {
    if (!independent_) independent_ = max_independent_size(g_, lat_);
    return *independent_;
  }
  Reconciliation const& reconciliation() {
    if (!reconciliation_) reconciliation_ = reconcile(g_, lat_, structure());
    return *reconciliation_;
  }
  bool positive() { return reconciliation().verdict.positive(); }

  std::vector<SubgroupIndex> const& normal_subgroups() {
    if (!normals_) {
      normals_.emplace();
      for (SubgroupIndex i = 0; i < lat_.size(); ++i)
        if (is_normal(g_, lat_[i]).normal) normals_->push_back(i);
    }
    return *normals_;
  }

  GroupMetrics metrics() {
    GroupMetrics m;
    m.d = generators().d;
    m.m = independent_ ? independent_->m : -1;
    m.ell = ell();
    m.lambda = lambda();
    m.phi_order = frattini(lat_).order();
    m.fit_order = structure().fitting.order();
    m.nilpotent = structure().is_nilpotent;
    m.supersolvable = structure().is_supersolvable;
    m.uniformly_generated = reconciliation().behavioral;
    m.verdict = reconciliation().verdict;
    return m;
  }

 private:
  Limits limits_;
  GroupTable g_;
  SubgroupLattice lat_;
  ChainProfile profile_;
  std::optional<StructureReport> structure_;
  std::optional<MinimalGenerators> generators_;
  std::optional<MaxIndependent> independent_;
  std::optional<Reconciliation> reconciliation_;
  std::optional<std::vector<SubgroupIndex>> normals_;
};

CheckOutcome pass(Check c) { return {c, Status::kPass, {}}; }
CheckOutcome fail(Check c, std::string detail) { return {c, Status::kFail, std::move(detail)}; }
CheckOutcome not_applicable(Check c) { return {c, Status::kNotApplicable, {}}; }

std::string subgroup_label(SubgroupLattice const& lat, SubgroupIndex i) {
  return "N#" + std::to_string(i) + " (order " + std::to_string(lat[i].order()) + ")";
}

CheckOutcome check_lemma3(EntryContext& ctx) {
  if (ctx.g().order() == 1) return not_applicable(Check::kLemma3);
  for (int d = 1; d <= ctx.ell() + 1; ++d) {
    bool uniform = is_d_uniformly_generated(ctx.lat(), d);
    if (uniform != (d == ctx.ell())) {
      return fail(Check::kLemma3, "d=" + std::to_string(d) + " uniform=" + (uniform ? "yes" : "no") +
                                      " but ell=" + std::to_string(ctx.ell()));
    }
  }
  return pass(Check::kLemma3);
}

CheckOutcome check_oracle_diff(EntryContext& ctx) {
  if (ctx.g().order() == 1 || ctx.g().order() > kOracleOrder) return not_applicable(Check::kOracleDiff);
  for (int d = 1; d <= kOracleMaxD; ++d) {
    bool dag = is_d_uniformly_generated(ctx.lat(), d);
    auto oracle = tuple_oracle(ctx.g(), d);
    if (dag != oracle.uniform()) {
      return fail(Check::kOracleDiff, "d=" + std::to_string(d) + " lattice says " +
                                          (dag ? "uniform" : "not uniform") + ", tuple scan says " +
                                          (oracle.uniform() ? "uniform" : "not uniform"));
    }
  }
  return pass(Check::kOracleDiff);
}

CheckOutcome check_lemma2b(EntryContext& ctx) {
  if (!ctx.positive()) return not_applicable(Check::kLemma2b);
  auto phi = frattini(ctx.lat());
  if (phi.order() != 1) return fail(Check::kLemma2b, "|Phi(G)| = " + std::to_string(phi.order()));
  return pass(Check::kLemma2b);
}

CheckOutcome check_lemma2a(EntryContext& ctx) {
  if (!ctx.positive()) return not_applicable(Check::kLemma2a);
  for (SubgroupIndex n : ctx.normal_subgroups()) {
    Subgroup const& ns = ctx.lat()[n];
    auto sub = subgroup_as_group(ctx.g(), ns);
    auto sub_verdict = classify(sub.group, ctx.limits());
    if (!sub_verdict.positive()) {
      return fail(Check::kLemma2a, subgroup_label(ctx.lat(), n) + " classifies as " + to_string(sub_verdict));
    }
    auto q = quotient(ctx.g(), ns);
    auto q_verdict = classify(q.group, ctx.limits());
    if (!q_verdict.positive()) {
      return fail(Check::kLemma2a, "G/" + subgroup_label(ctx.lat(), n) + " classifies as " + to_string(q_verdict));
    }
  }
  return pass(Check::kLemma2a);
}

CheckOutcome check_e1(EntryContext& ctx) {
  int d = ctx.generators().d;
  int m = ctx.independent().m;
  int ell = ctx.ell(), lambda = ctx.lambda();
  auto values = "d=" + std::to_string(d) + " m=" + std::to_string(m) + " ell=" + std::to_string(ell) +
                " lambda=" + std::to_string(lambda);
  if (!(d <= m && m <= ell && d <= lambda && lambda <= ell)) return fail(Check::kE1Inequalities, values);
  if (ctx.positive()) {
    int r = ctx.reconciliation().verdict.predicted_rank();
    if (!(d == ell && m == ell && lambda == ell && d == r)) {
      return fail(Check::kE1Inequalities, values + " predicted=" + std::to_string(r));
    }
  }
  return pass(Check::kE1Inequalities);
}

CheckOutcome check_iwasawa(EntryContext& ctx) {
  bool ss = ctx.structure().is_supersolvable;
  if (ss != (ctx.ell() == ctx.lambda())) {
    return fail(Check::kIwasawa, std::string("supersolvable=") + (ss ? "yes" : "no") +
                                     " ell=" + std::to_string(ctx.ell()) +
                                     " lambda=" + std::to_string(ctx.lambda()));
  }
  return pass(Check::kIwasawa);
}

CheckOutcome check_ell_additivity(EntryContext& ctx, std::size_t budget) {
  auto const& normals = ctx.normal_subgroups();
  auto const& p = ctx.profile();
  for (SubgroupIndex n : normals) {
    int below = p.longest_from_bottom[n], above = p.longest_to_top[n];
    if (below + above != ctx.ell()) {
      return fail(Check::kEllAdditivity, subgroup_label(ctx.lat(), n) + ": ell(N)=" + std::to_string(below) +
                                             " ell(G/N)=" + std::to_string(above) +
                                             " ell(G)=" + std::to_string(ctx.ell()));
    }
  }
  // The same identity through explicitly built groups, for an evenly spread
  // sample of the normal subgroups.
  std::size_t const count = normals.size();
  std::size_t const take = std::min(count, budget);
  for (std::size_t i = 0; i < take; ++i) {
    std::size_t pick = take == 1 ? 0 : i * (count - 1) / (take - 1);
    SubgroupIndex n = normals[pick];
    Subgroup const& ns = ctx.lat()[n];
    auto sub = subgroup_as_group(ctx.g(), ns);
    auto q = quotient(ctx.g(), ns);
    int ell_n = chain_report(SubgroupLattice::enumerate(sub.group, ctx.limits())).length_ell;
    int ell_q = chain_report(SubgroupLattice::enumerate(q.group, ctx.limits())).length_ell;
    if (ell_n + ell_q != ctx.ell() || ell_n != p.longest_from_bottom[n] || ell_q != p.longest_to_top[n]) {
      return fail(Check::kEllAdditivity, subgroup_label(ctx.lat(), n) + " built explicitly: ell(N)=" +
                                             std::to_string(ell_n) + " ell(G/N)=" + std::to_string(ell_q) +
                                             " ell(G)=" + std::to_string(ctx.ell()));
    }
  }
  return pass(Check::kEllAdditivity);
}

CheckOutcome check_d_subadditivity(EntryContext& ctx) {
  auto const d_all = generator_numbers(ctx.lat());
  int const d = ctx.generators().d;
  if (d_all[ctx.lat().top()] != d) {
    return fail(Check::kDSubadditivity, "search d=" + std::to_string(d) + " but dynamic program gives " +
                                            std::to_string(d_all[ctx.lat().top()]));
  }
  for (SubgroupIndex n : ctx.normal_subgroups()) {
    int d_n = d_all[n];
    int d_q = relative_generator_number(ctx.lat(), n, ctx.lat().top());
    if (d > d_n + d_q) {
      return fail(Check::kDSubadditivity, subgroup_label(ctx.lat(), n) + ": d(G)=" + std::to_string(d) +
                                              " > d(N)+d(G/N)=" + std::to_string(d_n) + "+" +
                                              std::to_string(d_q));
    }
  }
  return pass(Check::kDSubadditivity);
}

CheckOutcome check_reconcile(EntryContext& ctx) {
  auto const& r = ctx.reconciliation();
  if (!r.agree) return fail(Check::kTheorem1Reconcile, r.witness);
  return pass(Check::kTheorem1Reconcile);
}

}  // namespace

EntryResult verify_entry(CatalogEntry const& entry, CampaignOptions const& options) {
  EntryResult r;
  r.label = entry.label;
  r.order = entry.order;
  try {
    EntryContext ctx(build_from_spec(entry.spec, options.limits), options.limits);
    for (Check c : options.checks) {
      switch (c) {
        case Check::kLemma3:
          r.outcomes.push_back(check_lemma3(ctx));
          break;
        case Check::kLemma2a:
          r.outcomes.push_back(check_lemma2a(ctx));
          break;
        case Check::kLemma2b:
          r.outcomes.push_back(check_lemma2b(ctx));
          break;
        case Check::kE1Inequalities:
          r.outcomes.push_back(check_e1(ctx));
          break;
        case Check::kIwasawa:
          r.outcomes.push_back(check_iwasawa(ctx));
          break;
        case Check::kEllAdditivity:
          r.outcomes.push_back(check_ell_additivity(ctx, options.explicit_normal_budget));
          break;
        case Check::kDSubadditivity:
          r.outcomes.push_back(check_d_subadditivity(ctx));
          break;
        case Check::kTheorem1Reconcile:
          r.outcomes.push_back(check_reconcile(ctx));
          break;
        case Check::kOracleDiff:
          r.outcomes.push_back(check_oracle_diff(ctx));
          break;
        case Check::kAltFormula:
          break;  // campaign-wide, not per entry
      }
    }
    bool wants_metrics = std::any_of(options.checks.begin(), options.checks.end(), [](Check c) {
      return c == Check::kTheorem1Reconcile || c == Check::kE1Inequalities;
    });
    if (wants_metrics) r.metrics = ctx.metrics();
  } catch (CapExceeded const& e) {
    r.outcomes.clear();
    r.skipped = e.what();
  }
  return r;
}

CampaignReport run_campaign(std::vector<CatalogEntry> const& catalog, CampaignOptions const& options) {
  CampaignReport report;
  report.checks = options.checks;
  std::vector<CatalogEntry const*> selected;
  for (auto const& e : catalog)
    if (options.slow || e.order <= kSlowOrder) selected.push_back(&e);

  bool has_entry_checks = std::any_of(options.checks.begin(), options.checks.end(),
                                      [](Check c) { return c != Check::kAltFormula; });
  if (has_entry_checks) {
    report.entries.resize(selected.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (std::size_t i = next++; i < selected.size(); i = next++) {
        try {
          report.entries[i] = verify_entry(*selected[i], options);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    unsigned const workers = std::max(1u, options.workers);
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
  }

  if (std::find(options.checks.begin(), options.checks.end(), Check::kAltFormula) != options.checks.end()) {
    unsigned const last = options.slow ? 7 : 6;
    for (unsigned n = 3; n <= last; ++n) {
      auto g = build_from_spec(Alternating{n}, options.limits);
      int ell = chain_report(SubgroupLattice::enumerate(g, options.limits)).length_ell;
      report.alt_formula.push_back({n, ell, alternating_length_formula(n)});
    }
  }
  return report;
}

std::size_t CampaignReport::failures() const {
  std::size_t n = 0;
  for (auto const& e : entries)
    for (auto const& o : e.outcomes)
      if (o.status == Status::kFail) ++n;
  for (auto const& a : alt_formula)
    if (!a.pass()) ++n;
  return n;
}

std::size_t CampaignReport::skipped() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](EntryResult const& e) { return e.skipped.has_value(); }));
}

int CampaignReport::exit_code() const {
  if (failures()) return 1;
  if (skipped()) return 3;
  return 0;
}

std::string CampaignReport::text() const {
  std::ostringstream out;
  out << "unigen verify report\n";
  out << "checks:";
  for (Check c : checks) out << ' ' << to_string(c);
  out << "\nentries: " << entries.size() << '\n';
  std::size_t passed = 0, na = 0;
  for (auto const& e : entries) {
    out << e.label << " order=" << e.order;
    if (e.metrics) {
      out << " d=" << e.metrics->d;
      if (e.metrics->m >= 0) out << " m=" << e.metrics->m;
      out << " ell=" << e.metrics->ell << " lambda=" << e.metrics->lambda
          << " verdict=" << to_string(e.metrics->verdict);
    }
    if (e.skipped) {
      out << " SKIPPED: " << *e.skipped << '\n';
      continue;
    }
    out << " |";
    for (auto const& o : e.outcomes) {
      out << ' ' << to_string(o.check) << '=' << status_text(o.status);
      if (o.status == Status::kPass) ++passed;
      if (o.status == Status::kNotApplicable) ++na;
    }
    out << '\n';
    for (auto const& o : e.outcomes)
      if (o.status == Status::kFail) out << "  FAIL " << to_string(o.check) << ": " << o.detail << '\n';
  }
  for (auto const& a : alt_formula) {
    out << "alt-formula A" << a.n << " ell=" << a.computed << " expected=" << a.expected << ' '
        << (a.pass() ? "pass" : "FAIL") << '\n';
    if (a.pass()) ++passed;
  }
  out << "summary: passed=" << passed << " failed=" << failures() << " not_applicable=" << na
      << " skipped_entries=" << skipped() << '\n';
  return out.str();
}

}  // namespace unigen
