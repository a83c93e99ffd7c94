#include <doctest.h>

#include <functional>
#include <set>

#include "helpers.hpp"
#include "unigen/structure.hpp"

using namespace unigen;
using testing::build;

namespace {

// Supersolvable iff there is a chain of normal subgroups of G with prime
// indices between consecutive terms.
bool oracle_supersolvable(GroupTable const& g) {
  auto subs = oracle::all_subgroups(g);
  std::vector<oracle::Set> normal;
  for (auto const& s : subs)
    if (oracle::is_normal(g, s)) normal.push_back(s);
  std::function<bool(oracle::Set const&)> climb = [&](oracle::Set const& h) {
    std::size_t ho = oracle::count(h);
    if (ho == g.order()) return true;
    for (auto const& k : normal) {
      std::size_t ko = oracle::count(k);
      if (ko <= ho || ko % ho != 0 || !oracle::subset(h, k)) continue;
      std::size_t idx = ko / ho;
      bool prime = idx > 1;
      for (std::size_t p = 2; p * p <= idx; ++p) prime = prime && idx % p != 0;
      if (prime && climb(k)) return true;
    }
    return false;
  };
  oracle::Set trivial(g.order(), false);
  trivial[0] = true;
  return climb(trivial);
}

}  // namespace

TEST_CASE("S4 structure") {
  auto g = build("S4");
  auto lat = SubgroupLattice::enumerate(g);
  auto r = structure_report(g, lat);
  CHECK(r.fitting.order() == 4);
  CHECK(r.derived.order() == 12);
  CHECK_FALSE(r.is_nilpotent);
  CHECK_FALSE(r.is_supersolvable);
  CHECK(r.prime_factorization == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 1}});
  CHECK(r.sylow_normal == std::vector<std::pair<std::uint64_t, bool>>{{2, false}, {3, false}});
  CHECK(is_solvable(g));
  CHECK_FALSE(is_solvable(build("A5")));
  CHECK(sylow_subgroups(lat, 2).size() == 3);
  CHECK(sylow_subgroups(lat, 3).size() == 4);
}

TEST_CASE("Fitting subgroup and nilpotency against brute force") {
  for (auto const& e : testing::catalog_upto(32)) {
    CAPTURE(e.label);
    auto g = build_from_spec(e.spec);
    auto lat = SubgroupLattice::enumerate(g);
    auto subs = oracle::all_subgroups(g);
    CHECK(testing::to_set(fitting(g, lat)) == oracle::fitting(g, subs));
    CHECK(is_nilpotent(g, lat) == oracle::is_nilpotent(g, oracle::whole(g)));
    for (SubgroupIndex h = 0; h < lat.size(); ++h)
      CHECK(is_nilpotent_subgroup(lat, h) == oracle::is_nilpotent(g, testing::to_set(lat[h])));
  }
}

TEST_CASE("supersolvability against a normal-series search") {
  SupersolvableCache cache;
  for (auto const& e : testing::catalog_upto(48)) {
    CAPTURE(e.label);
    auto g = build_from_spec(e.spec);
    bool expected = oracle_supersolvable(g);
    CHECK(is_supersolvable(g, &cache) == expected);
    CHECK(is_supersolvable(g, nullptr) == expected);
  }
  CHECK(cache.size() > 0);
  CHECK(cache.lookup(build("S4")) == std::optional<bool>(false));
  CHECK_FALSE(is_supersolvable(build("A4"), nullptr));
  CHECK(is_supersolvable(build("Scalar(7,1,3)"), nullptr));
}

TEST_CASE("p-cores") {
  auto g = build("S4");
  auto lat = SubgroupLattice::enumerate(g);
  CHECK(p_core(lat, 2).order() == 4);
  CHECK(p_core(lat, 3).order() == 1);
  auto d6 = SubgroupLattice::enumerate(build("D6"));
  CHECK(p_core(d6, 3).order() == 3);
  CHECK(p_core(d6, 2).order() == 2);
}

TEST_CASE("binary digit sums") {
  CHECK(digit_sum(0, 2) == 0);
  CHECK(digit_sum(6, 2) == 2);
  CHECK(digit_sum(7, 2) == 3);
  CHECK(digit_sum(8, 2) == 1);
  CHECK(digit_sum(10, 3) == 2);
}

TEST_CASE("elementary abelian detection and scalar action") {
  auto g = build("Scalar(5,1,2)");
  auto lat = SubgroupLattice::enumerate(g);
  auto fit = fitting(g, lat);
  auto ea = elementary_abelian(g, fit);
  REQUIRE(ea.has_value());
  CHECK(ea->p == 5);
  CHECK(ea->rank == 1);
  for (Element x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != 2) continue;
    CHECK(scalar_action_on(g, fit, x) == std::optional<std::uint64_t>(4));
  }
  CHECK_FALSE(elementary_abelian(build("C4"), Subgroup::whole(4)).has_value());

  auto s = build("Scalar(7,2,3)");
  auto slat = SubgroupLattice::enumerate(s);
  auto sfit = fitting(s, slat);
  std::set<std::uint64_t> lambdas;
  for (Element x = 0; x < s.order(); ++x)
    if (s.element_order(x) == 3) lambdas.insert(*scalar_action_on(s, sfit, x));
  CHECK(lambdas == std::set<std::uint64_t>{2, 4});

  auto d4 = build("D4");
  auto d4lat = SubgroupLattice::enumerate(d4);
  for (SubgroupIndex h = 0; h < d4lat.size(); ++h) {
    if (d4lat[h].order() != 4 || !elementary_abelian(d4, d4lat[h])) continue;
    // a reflection outside a Klein four-subgroup does not act as a scalar
    for (Element x = 0; x < d4.order(); ++x)
      if (!d4lat[h].contains(x) && d4.element_order(x) == 2) CHECK_FALSE(scalar_action_on(d4, d4lat[h], x));
  }
}
