#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "unigen/analysis.hpp"
#include "unigen/campaign.hpp"
#include "unigen/catalog.hpp"
#include "unigen/errors.hpp"
#include "unigen/io.hpp"
#include "unigen/spec.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct LoadedGroup {
  std::string label;
  unigen::GroupTable group;
};

// A readable path is a group file; anything else is a spec expression.
LoadedGroup load_input(std::string const& input, unigen::Limits const& limits, unigen::AssociativityCheck assoc) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    return {input, unigen::load_group_file(input, limits, assoc)};
  }
  auto spec = unigen::parse_spec(input);
  return {unigen::to_string(spec), unigen::build_from_spec(spec, limits, assoc)};
}

int run_analyze(std::string const& input, bool json, bool csv, bool chains, bool paranoid,
                unigen::Limits const& limits) {
  auto assoc = paranoid ? unigen::AssociativityCheck::kFull : unigen::AssociativityCheck::kPolicy;
  auto [label, group] = load_input(input, limits, assoc);
  auto a = unigen::analyze_group(label, std::move(group), limits);
  if (json) {
    std::cout << unigen::to_json(a, chains).dump(2) << '\n';
  } else if (csv) {
    std::cout << unigen::csv_header() << '\n' << unigen::csv_row(a) << '\n';
  } else {
    std::cout << unigen::format_human(a, chains);
  }
  return a.metrics.verdict.behavioral_agreement ? kExitPass : kExitFailure;
}

int run_verify(std::uint64_t max_order, std::string const& checks, unsigned workers, bool slow,
               unigen::Limits const& limits) {
  unigen::CampaignOptions options;
  if (!checks.empty()) options.checks = unigen::parse_check_list(checks);
  options.workers = workers;
  options.slow = slow;
  options.limits = limits;
  auto report = unigen::run_campaign(unigen::build_catalog(max_order), options);
  std::cout << report.text();
  return report.exit_code();
}

void print_chain(unigen::SubgroupLattice const& lat, std::string const& name,
                 std::vector<unigen::SubgroupIndex> const& chain) {
  std::cout << name << " (length " << chain.size() - 1 << "): " << unigen::describe_chain(lat, chain) << '\n';
  for (auto i : chain) std::cout << "  " << lat[i].order() << ' ' << lat[i].hex() << '\n';
}

int run_chains(std::string const& input, bool longest, bool shortest, std::string const& export_path,
               unigen::Limits const& limits) {
  auto [label, group] = load_input(input, limits, unigen::AssociativityCheck::kPolicy);
  auto lat = unigen::SubgroupLattice::enumerate(group, limits);
  auto report = unigen::chain_report(lat);
  std::cout << label << ": order " << group.order() << ", " << lat.size() << " subgroups, ell "
            << report.length_ell << ", lambda " << report.depth_lambda << '\n';
  if (!longest && !shortest) longest = shortest = true;
  if (longest) print_chain(lat, "longest", report.longest_chain);
  if (shortest) print_chain(lat, "shortest", report.shortest_chain);
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) throw unigen::FormatError("cannot write " + export_path);
    out << unigen::export_lattice(lat).dump() << '\n';
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup lattices, chain lengths and generation invariants of finite groups"};
  app.require_subcommand(1);

  std::string input;
  bool json = false, csv = false, with_chains = false, paranoid = false;
  auto* analyze = app.add_subcommand("analyze", "Report invariants of one group");
  analyze->add_option("input", input, "Spec expression (e.g. \"S4\", \"E(3,2) x C2\") or group JSON file")
      ->required();
  auto* json_flag = analyze->add_flag("--json", json, "JSON output");
  analyze->add_flag("--csv", csv, "CSV row output")->excludes(json_flag);
  analyze->add_flag("--chains", with_chains, "Include witness chains");
  analyze->add_flag("--paranoid", paranoid, "Check associativity on every triple");

  std::uint64_t max_order = 64;
  std::string checks;
  unsigned workers = 1;
  bool slow = false;
  auto* verify = app.add_subcommand("verify", "Run checks over the constructor catalog");
  verify->add_option("--max-order", max_order, "Largest catalog order")->check(CLI::PositiveNumber);
  verify->add_option("--checks", checks, "Comma-separated check names (default: all)");
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--slow", slow, "Include A7 and entries above order 512");

  std::string chain_input, export_path;
  bool longest = false, shortest = false;
  auto* chains = app.add_subcommand("chains", "Print longest and shortest unrefinable chains");
  chains->add_option("spec", chain_input, "Spec expression or group JSON file")->required();
  chains->add_flag("--longest", longest, "Print a longest chain");
  chains->add_flag("--shortest", shortest, "Print a shortest chain");
  chains->add_option("--export", export_path, "Write the lattice as JSON");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    auto limits = unigen::Limits::from_env();
    if (*analyze) return run_analyze(input, json, csv, with_chains, paranoid, limits);
    if (*verify) return run_verify(max_order, checks, workers, slow, limits);
    if (*chains) return run_chains(chain_input, longest, shortest, export_path, limits);
  } catch (unigen::CapExceeded const& e) {
    std::cerr << "unigen: " << e.what() << '\n';
    return kExitCap;
  } catch (unigen::Error const& e) {
    std::cerr << "unigen: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
