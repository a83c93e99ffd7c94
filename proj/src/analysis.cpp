#include "unigen/analysis.hpp"

#include <iomanip>
#include <sstream>

namespace unigen {

using nlohmann::json;

Analysis analyze_group(std::string label, GroupTable g, Limits const& limits) {
  auto lat = SubgroupLattice::enumerate(g, limits);
  Analysis a{std::move(label), std::move(g), std::move(lat), {}, {}, {}, {}, {}, {}};
  a.chains = chain_report(a.lattice);
  a.structure = structure_report(a.group, a.lattice);
  a.generators = minimal_generators(a.group, a.lattice);
  a.independent = max_independent_size(a.group, a.lattice);
  a.phi = frattini(a.lattice);
  auto rec = reconcile(a.group, a.lattice, a.structure);

  GroupMetrics& m = a.metrics;
  m.d = a.generators.d;
  m.m = a.independent.m;
  m.ell = a.chains.length_ell;
  m.lambda = a.chains.depth_lambda;
  m.phi_order = a.phi.order();
  m.fit_order = a.structure.fitting.order();
  m.nilpotent = a.structure.is_nilpotent;
  m.supersolvable = a.structure.is_supersolvable;
  m.uniformly_generated = rec.behavioral;
  m.verdict = rec.verdict;
  return a;
}

std::string describe_chain(SubgroupLattice const& lat, std::span<SubgroupIndex const> chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += " < ";
    out += std::to_string(lat[chain[i]].order());
  }
  return out;
}

std::string csv_header() {
  return "spec,order,d,m,ell,lambda,phi_order,fit_order,nilpotent,supersolvable,verdict";
}

namespace {

std::string csv_quote(std::string const& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json verdict_record(std::string const& spec, std::size_t order, ClassificationVerdict const& v) {
  json j{{"spec", spec},          {"order", order},          {"verdict", to_string(v)},
         {"p", nullptr},          {"q", nullptr},            {"d", nullptr},
         {"lambda", nullptr},     {"behavioral_agreement", v.behavioral_agreement}};
  if (auto const* e = std::get_if<ElementaryAbelian>(&v.verdict)) {
    j["kind"] = "ElementaryAbelian";
    if (e->p != 0) j["p"] = e->p;
    j["d"] = e->d;
  } else if (auto const* s = std::get_if<ScalarSemidirect>(&v.verdict)) {
    j["kind"] = "ScalarSemidirect";
    j["p"] = s->p;
    j["q"] = s->q;
    j["d"] = s->k + 1;
    j["lambda"] = s->lambda;
  } else {
    j["kind"] = "NotUniformlyGenerated";
    j["reason"] = std::get<NotUniformlyGenerated>(v.verdict).reason;
  }
  return j;
}

std::string csv_row(Analysis const& a) {
  GroupMetrics const& m = a.metrics;
  std::ostringstream out;
  out << csv_quote(a.label) << ',' << a.group.order() << ',' << m.d << ',' << m.m << ',' << m.ell
      << ',' << m.lambda << ',' << m.phi_order << ',' << m.fit_order << ','
      << (m.nilpotent ? "true" : "false") << ',' << (m.supersolvable ? "true" : "false") << ','
      << csv_quote(to_string(m.verdict));
  return out.str();
}

json to_json(Analysis const& a, bool with_chains) {
  GroupMetrics const& m = a.metrics;
  json primes = json::array();
  for (auto const& [p, e] : a.structure.prime_factorization) primes.push_back({p, e});
  json sylow = json::object();
  for (auto const& [p, unique] : a.structure.sylow_normal) sylow[std::to_string(p)] = unique;
  json j{
      {"spec", a.label},
      {"order", a.group.order()},
      {"subgroups", a.lattice.size()},
      {"d", m.d},
      {"m", m.m},
      {"ell", m.ell},
      {"lambda", m.lambda},
      {"phi_order", m.phi_order},
      {"fit_order", m.fit_order},
      {"derived_order", a.structure.derived.order()},
      {"nilpotent", m.nilpotent},
      {"supersolvable", m.supersolvable},
      {"uniformly_generated", m.uniformly_generated},
      {"prime_factorization", primes},
      {"sylow_normal", sylow},
      {"d_witness", a.generators.witness.elements},
      {"m_witness", a.independent.witness},
      {"classification", verdict_record(a.label, a.group.order(), m.verdict)},
  };
  if (with_chains) {
    auto hexes = [&](std::vector<SubgroupIndex> const& chain) {
      json out = json::array();
      for (auto i : chain) out.push_back(json{{"order", a.lattice[i].order()}, {"members", a.lattice[i].hex()}});
      return out;
    };
    j["longest_chain"] = hexes(a.chains.longest_chain);
    j["shortest_chain"] = hexes(a.chains.shortest_chain);
  }
  return j;
}

std::string format_human(Analysis const& a, bool with_chains) {
  GroupMetrics const& m = a.metrics;
  std::ostringstream out;
  auto row = [&](std::string const& key, auto const& value) {
    out << "  " << std::left << std::setw(16) << key << value << '\n';
  };
  out << a.label << '\n';
  row("order", a.group.order());
  row("subgroups", a.lattice.size());
  row("d", m.d);
  row("m", m.m);
  row("ell", m.ell);
  row("lambda", m.lambda);
  row("|Phi|", m.phi_order);
  row("|Fit|", m.fit_order);
  row("|G'|", a.structure.derived.order());
  row("nilpotent", m.nilpotent ? "yes" : "no");
  row("supersolvable", m.supersolvable ? "yes" : "no");
  row("uniform", m.uniformly_generated ? "yes" : "no");
  row("verdict", to_string(m.verdict));
  row("agreement", m.verdict.behavioral_agreement ? "yes" : "NO");
  if (with_chains) {
    row("longest chain", describe_chain(a.lattice, a.chains.longest_chain));
    row("shortest chain", describe_chain(a.lattice, a.chains.shortest_chain));
  }
  return out.str();
}

}  // namespace unigen
