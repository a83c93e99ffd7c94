#ifndef UNIGEN_ANALYSIS_HPP
#define UNIGEN_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "unigen/classifier.hpp"
#include "unigen/generation.hpp"
#include "unigen/group.hpp"
#include "unigen/lattice.hpp"
#include "unigen/spec.hpp"
#include "unigen/structure.hpp"

namespace unigen {

struct GroupMetrics {
  int d = 0;
  int m = 0;
  int ell = 0;
  int lambda = 0;
  std::size_t phi_order = 1;
  std::size_t fit_order = 1;
  bool nilpotent = true;
  bool supersolvable = true;
  bool uniformly_generated = true;  // behavioral
  ClassificationVerdict verdict;
};

// Everything `unigen analyze` reports about one group.
struct Analysis {
  std::string label;
  GroupTable group;
  SubgroupLattice lattice;
  ChainReport chains;
  StructureReport structure;
  MinimalGenerators generators;
  MaxIndependent independent;
  Subgroup phi;
  GroupMetrics metrics;
};

Analysis analyze_group(std::string label, GroupTable g, Limits const& limits = {});

// Fixed CSV columns: spec, order, d, m, ell, lambda, phi_order, fit_order,
// nilpotent, supersolvable, verdict.
std::string csv_header();
std::string csv_row(Analysis const& a);

nlohmann::json to_json(Analysis const& a, bool with_chains);

// {spec, order, verdict, p, q, d, lambda, behavioral_agreement}; fields that
// do not apply to the verdict are null.
nlohmann::json verdict_record(std::string const& spec, std::size_t order, ClassificationVerdict const& v);
std::string format_human(Analysis const& a, bool with_chains);

// Subgroup orders along a chain, e.g. "1 < 2 < 4 < 12 < 24".
std::string describe_chain(SubgroupLattice const& lat, std::span<SubgroupIndex const> chain);

}  // namespace unigen

#endif  // UNIGEN_ANALYSIS_HPP
