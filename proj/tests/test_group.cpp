#include <doctest.h>

#include <cstdlib>
#include <random>

#include "helpers.hpp"
#include "unigen/errors.hpp"
#include "unigen/group.hpp"

using namespace unigen;
using testing::build;

namespace {

std::vector<Element> cyclic_table(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  return t;
}

}  // namespace

TEST_CASE("from_table accepts a cyclic table and computes element orders") {
  auto g = GroupTable::from_table(12, cyclic_table(12));
  CHECK(g.order() == 12);
  CHECK(g.is_abelian());
  for (Element a = 0; a < 12; ++a) {
    std::uint32_t expected = 1;
    while ((a * expected) % 12 != 0) ++expected;
    CHECK(g.element_order(a) == expected);
    CHECK(g.mul(a, g.inv(a)) == kIdentity);
  }
  CHECK(g.pow(5, 12) == kIdentity);
  CHECK(g.pow(5, 2) == 10);
}

TEST_CASE("from_table rejects broken tables") {
  SUBCASE("identity not at index 0") {
    auto t = cyclic_table(3);
    std::swap(t[0], t[1]);
    CHECK_THROWS_AS(GroupTable::from_table(3, t), FormatError);
  }
  SUBCASE("repeated entry in a row") {
    auto t = cyclic_table(4);
    t[1 * 4 + 2] = t[1 * 4 + 3];
    CHECK_THROWS_AS(GroupTable::from_table(4, t), FormatError);
  }
  SUBCASE("wrong size") { CHECK_THROWS_AS(GroupTable::from_table(4, cyclic_table(3)), FormatError); }
  SUBCASE("Latin square with identity that is not associative") {
    // A loop of order 5 that is not a group.
    std::vector<Element> t = {0, 1, 2, 3, 4,  //
                              1, 0, 3, 4, 2,  //
                              2, 4, 0, 1, 3,  //
                              3, 2, 4, 0, 1,  //
                              4, 3, 1, 2, 0};
    CHECK(check_group_axioms(5, t, AssociativityCheck::kSkip) == std::nullopt);
    CHECK_THROWS_AS(GroupTable::from_table(5, t), FormatError);
    CHECK_THROWS_AS(GroupTable::from_table(5, t, AssociativityCheck::kFull), FormatError);
  }
}

TEST_CASE("closure agrees with naive closure and is a closure operator") {
  std::mt19937 rng(7);
  for (auto const& spec : {"S4", "D6", "E(2,3)", "Scalar(3,2,2)", "A4 x C2", "C3 x S3"}) {
    auto g = build(spec);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g.order() - 1));
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Element> s;
      for (int k = 0, n = trial % 3 + 1; k < n; ++k) s.push_back(pick(rng));
      auto c = closure(g, s);
      CHECK(testing::to_set(c) == oracle::generated(g, s));
      // extensive
      for (Element x : s) CHECK(c.contains(x));
      // idempotent
      auto members = c.elements();
      CHECK(closure(g, members) == c);
      // monotone
      auto bigger = s;
      bigger.push_back(pick(rng));
      CHECK(c.is_subgroup_of(closure(g, bigger)));
      // join with the subgroup gives the same result
      std::vector<Element> extra{pick(rng)};
      auto all = members;
      all.push_back(extra[0]);
      CHECK(join(g, c, extra) == closure(g, all));
    }
  }
}

TEST_CASE("derived subgroup matches brute-force commutators") {
  for (auto const& e : testing::catalog_upto(32)) {
    auto g = build_from_spec(e.spec);
    CAPTURE(e.label);
    CHECK(testing::to_set(derived_subgroup(g)) == oracle::commutator_subgroup(g, oracle::whole(g), oracle::whole(g)));
  }
}

TEST_CASE("normality and quotients") {
  for (auto const& spec : {"S4", "D4", "A4 x C2", "Scalar(5,1,2)", "E(2,2) x C3", "D6"}) {
    auto g = build(spec);
    CAPTURE(spec);
    for (auto const& s : oracle::all_subgroups(g)) {
      auto h = testing::from_set(s);
      auto nr = is_normal(g, h);
      CHECK(nr.normal == oracle::is_normal(g, s));
      if (!nr.normal) {
        REQUIRE(nr.witness.has_value());
        auto [x, y] = *nr.witness;
        CHECK(h.contains(y));
        CHECK_FALSE(h.contains(g.conj(x, y)));
        CHECK_THROWS_AS(quotient(g, h), NotNormalError);
        continue;
      }
      auto q = quotient(g, h);
      CHECK(q.group.order() * h.order() == g.order());
      CHECK(q.projection[kIdentity] == kIdentity);
      // projection is a surjective homomorphism with kernel h
      std::vector<bool> hit(q.group.order(), false);
      for (Element a = 0; a < g.order(); ++a) {
        hit[q.projection[a]] = true;
        CHECK((q.projection[a] == kIdentity) == h.contains(a));
        for (Element b = 0; b < g.order(); ++b)
          CHECK(q.projection[g.mul(a, b)] == q.group.mul(q.projection[a], q.projection[b]));
      }
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool v) { return v; }));

      auto sub = subgroup_as_group(g, h);
      CHECK(sub.group.order() == h.order());
      for (Element a = 0; a < sub.group.order(); ++a)
        for (Element b = 0; b < sub.group.order(); ++b)
          CHECK(sub.embedding[sub.group.mul(a, b)] == g.mul(sub.embedding[a], sub.embedding[b]));
    }
  }
}

TEST_CASE("direct products") {
  auto a = build("S3");
  auto b = build("C4");
  auto p = direct_product(a, b);
  CHECK(p.order() == 24);
  CHECK_FALSE(p.is_abelian());
  CHECK(oracle::rank(p) == 2);
  Limits small;
  small.order_cap = 20;
  CHECK_THROWS_AS(direct_product(a, b, small), CapExceeded);
}

TEST_CASE("permutation groups") {
  std::vector<Permutation> gens = {{1, 0, 2}, {1, 2, 0}};
  auto pg = enumerate_permutations(3, gens);
  CHECK(pg.group.order() == 6);
  CHECK_FALSE(pg.group.is_abelian());
  // (a*b)(i) = b(a(i))
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) {
      auto const& pa = pg.elements[a];
      auto const& pb = pg.elements[b];
      auto const& pab = pg.elements[pg.group.mul(a, b)];
      for (std::size_t i = 0; i < 3; ++i) CHECK(pab[i] == pb[pa[i]]);
    }
  }
  std::vector<Permutation> bad = {{0, 0, 1}};
  CHECK_THROWS_AS(from_permutations(3, bad), FormatError);
  std::vector<Permutation> s5 = {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}};
  Limits small;
  small.order_cap = 100;
  CHECK_THROWS_AS(from_permutations(5, s5, small), CapExceeded);
}

TEST_CASE("generators() generate the group") {
  for (auto const& e : testing::catalog_upto(40)) {
    auto g = build_from_spec(e.spec);
    std::vector<Element> gens(g.generators().begin(), g.generators().end());
    CHECK(oracle::count(oracle::generated(g, gens)) == g.order());
  }
}

TEST_CASE("order cap from the environment") {
  ::setenv("UNIGEN_ORDER_CAP", "100", 1);
  CHECK(Limits::from_env().order_cap == 100);
  ::setenv("UNIGEN_ORDER_CAP", "ten", 1);
  CHECK_THROWS_AS(Limits::from_env(), Error);
  ::unsetenv("UNIGEN_ORDER_CAP");
  CHECK(Limits::from_env().order_cap == 2520);
}

TEST_CASE("generating sequences") {
  auto g = build("S4");
  std::vector<Element> gens(g.generators().begin(), g.generators().end());
  auto seq = make_generating_sequence(g, gens);
  CHECK(seq.chain.back().order() == 24);
  CHECK(seq.strictly_ascending());
  gens.push_back(gens.front());
  CHECK_FALSE(make_generating_sequence(g, gens).strictly_ascending());
}
