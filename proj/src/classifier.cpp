#include "unigen/classifier.hpp"

#include <algorithm>

#include "unigen/arith.hpp"
#include "unigen/generation.hpp"

namespace unigen {

int ClassificationVerdict::predicted_rank() const noexcept {
  if (auto const* e = std::get_if<ElementaryAbelian>(&verdict)) return static_cast<int>(e->d);
  if (auto const* s = std::get_if<ScalarSemidirect>(&verdict)) return static_cast<int>(s->k) + 1;
  return -1;
}

std::string to_string(ClassificationVerdict const& v) {
  if (auto const* e = std::get_if<ElementaryAbelian>(&v.verdict)) {
    std::string p = e->p == 0 ? "-" : std::to_string(e->p);
    return "ElementaryAbelian(" + p + "," + std::to_string(e->d) + ")";
  }
  if (auto const* s = std::get_if<ScalarSemidirect>(&v.verdict)) {
    return "ScalarSemidirect(" + std::to_string(s->p) + "," + std::to_string(s->k) + "," +
           std::to_string(s->q) + "," + std::to_string(s->lambda) + ")";
  }
  return "NotUniformlyGenerated(" + std::get<NotUniformlyGenerated>(v.verdict).reason + ")";
}

namespace {

std::optional<ClassificationVerdict> elementary_verdict(GroupTable const& g) {
  auto info = elementary_abelian(g, Subgroup::whole(g.order()));
  if (!info) return std::nullopt;
  return ClassificationVerdict{ElementaryAbelian{info->p, info->rank}};
}

ClassificationVerdict not_uniform(std::string reason) {
  return ClassificationVerdict{NotUniformlyGenerated{std::move(reason)}};
}

ClassificationVerdict classify_with_fitting(GroupTable const& g, Subgroup const& fit) {
  if (auto v = elementary_verdict(g)) return *v;
  auto const factors = factorize(g.order());
  if (factors.size() == 1) return not_uniform("p-group that is not elementary abelian");
  if (factors.size() > 2) return not_uniform("|G| has more than two prime divisors");

  auto info = elementary_abelian(g, fit);
  if (!info || info->p == 0) return not_uniform("Fit(G) is not elementary abelian");
  std::uint64_t const index = g.order() / fit.order();
  if (!is_prime(index)) {
    return not_uniform("|G : Fit(G)| = " + std::to_string(index) + " is not prime");
  }
  std::uint64_t const p = info->p, q = index;
  if (q == p) return not_uniform("|G : Fit(G)| equals the prime of Fit(G)");

  std::optional<std::uint64_t> smallest;
  for (Element x = 1; x < g.order(); ++x) {
    if (g.element_order(x) != q) continue;
    auto lambda = scalar_action_on(g, fit, x);
    if (!lambda) {
      return not_uniform("an element of order " + std::to_string(q) +
                         " does not act as a scalar on Fit(G)");
    }
    if (*lambda == 1) return not_uniform("action on Fit(G) is trivial");
    if (multiplicative_order(*lambda, p) != q) {
      return not_uniform("scalar " + std::to_string(*lambda) + " does not have order " +
                         std::to_string(q) + " mod " + std::to_string(p));
    }
    smallest = std::min(smallest.value_or(*lambda), *lambda);
  }
  if (!smallest) return not_uniform("no element of order " + std::to_string(q));
  return ClassificationVerdict{ScalarSemidirect{p, info->rank, q, *smallest}};
}

}  // namespace

ClassificationVerdict classify(GroupTable const& g, SubgroupLattice const& lat,
                               StructureReport const& structure) {
  (void)lat;
  return classify_with_fitting(g, structure.fitting);
}

ClassificationVerdict classify(GroupTable const& g, Limits const& limits) {
  if (auto v = elementary_verdict(g)) return *v;
  auto lat = SubgroupLattice::enumerate(g, limits);
  return classify_with_fitting(g, fitting(g, lat));
}

Reconciliation reconcile(GroupTable const& g, SubgroupLattice const& lat,
                         StructureReport const& structure) {
  Reconciliation r;
  r.verdict = classify(g, lat, structure);
  r.behavioral = is_uniformly_generated_behavioral(g, lat);
  r.agree = r.verdict.positive() == r.behavioral;
  r.verdict.behavioral_agreement = r.agree;
  if (!r.agree) {
    auto gen = minimal_generators(g, lat);
    auto chains = chain_report(lat);
    if (r.behavioral) {
      r.witness = "d(G) = " + std::to_string(gen.d) + " uniformly generated, but classifier says " +
                  to_string(r.verdict);
    } else {
      // A maximal chain of length l(G) > d(G) gives a cyclic-extension chain
      // of length d(G) that stops short of G.
      std::string chain;
      for (std::size_t i = 0; i <= static_cast<std::size_t>(gen.d) && i < chains.longest_chain.size(); ++i) {
        if (i) chain += " < ";
        chain += std::to_string(lat[chains.longest_chain[i]].order());
      }
      r.witness = "classifier says " + to_string(r.verdict) + " but d(G) = " +
                  std::to_string(gen.d) + ", l(G) = " + std::to_string(chains.length_ell) +
                  "; chain orders " + chain + " stop short";
    }
  }
  return r;
}

Reconciliation reconcile(GroupTable const& g, SubgroupLattice const& lat) {
  return reconcile(g, lat, structure_report(g, lat));
}

}  // namespace unigen
