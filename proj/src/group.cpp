#include "unigen/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

#include "dimino.hpp"
#include "unigen/arith.hpp"
#include "unigen/errors.hpp"

namespace unigen {

Limits Limits::from_env() {
  Limits limits;
  if (char const* env = std::getenv("UNIGEN_ORDER_CAP"); env && *env) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
      throw Error(std::string("UNIGEN_ORDER_CAP is not a positive integer: ") + env);
    }
    limits.order_cap = static_cast<std::size_t>(v);
  }
  return limits;
}

namespace {

std::uint64_t hash_table(std::size_t order, std::span<Element const> table) {
  std::uint64_t h = 0xcbf29ce484222325ull ^ order;
  for (Element e : table) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::optional<std::string> check_group_axioms(std::size_t n, std::span<Element const> t,
                                              AssociativityCheck assoc) {
  if (n == 0) return "order must be positive";
  if (t.size() != n * n) {
    return "table has " + std::to_string(t.size()) + " entries, expected " + std::to_string(n * n);
  }
  for (Element e : t) {
    if (e >= n) return "table entry " + std::to_string(e) + " out of range";
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a] != a || t[a * n] != a) {
      return "element 0 is not the identity (fails at " + std::to_string(a) + ")";
    }
  }
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      Element v = t[a * n + b];
      if (seen[v] == stamp) return "row " + std::to_string(a) + " is not a permutation";
      seen[v] = stamp;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      Element v = t[a * n + b];
      if (seen[v] == stamp) return "column " + std::to_string(b) + " is not a permutation";
      seen[v] = stamp;
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return t[a * n + b]; };
  auto check = [&](std::size_t a, std::size_t b, std::size_t c) -> std::optional<std::string> {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      return "associativity fails for (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
             std::to_string(c) + ")";
    }
    return std::nullopt;
  };
  bool exhaustive = assoc == AssociativityCheck::kFull ||
                    (assoc == AssociativityCheck::kPolicy && n <= 64);
  if (exhaustive) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (auto err = check(a, b, c)) return err;
  } else if (assoc == AssociativityCheck::kPolicy) {
    std::mt19937_64 rng(0x5eed5eedull);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < 1000; ++i) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (auto err = check(a, b, c)) return err;
    }
  }
  return std::nullopt;
}

GroupTable GroupTable::from_table(std::size_t order, std::vector<Element> table,
                                  AssociativityCheck assoc) {
  if (auto err = check_group_axioms(order, table, assoc)) throw FormatError(*err);
  return GroupTable(order, std::move(table));
}

GroupTable GroupTable::trivial() { return GroupTable(1, std::vector<Element>{0}); }

GroupTable::GroupTable(std::size_t order, std::vector<Element> table)
    : order_(order), table_(std::move(table)), inverse_(order), element_orders_(order) {
  for (Element a = 0; a < order_; ++a) {
    auto r = row(a);
    inverse_[a] = static_cast<Element>(std::find(r.begin(), r.end(), kIdentity) - r.begin());
  }
  for (Element a = 0; a < order_; ++a) {
    std::uint32_t k = 1;
    for (Element x = a; x != kIdentity; x = mul(x, a)) ++k;
    element_orders_[a] = k;
  }
  for (Element a = 0; a < order_ && abelian_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  // Greedy generating set, trying high-order elements first.
  std::vector<Element> by_order(order_);
  std::iota(by_order.begin(), by_order.end(), Element{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element a, Element b) {
    return element_orders_[a] > element_orders_[b];
  });
  std::vector<Element> elements{kIdentity};
  Bitmask members(order_);
  members.set(kIdentity);
  std::vector<Element> gens;
  for (Element x : by_order) {
    if (elements.size() == order_) break;
    if (!members.test(x)) detail::dimino_extend(*this, elements, members, gens, x);
  }
  generators_ = std::move(gens);
  fingerprint_ = hash_table(order_, table_);
}

Element GroupTable::pow(Element a, std::uint64_t k) const noexcept {
  Element result = kIdentity;
  Element base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Subgroup Subgroup::trivial(std::size_t parent_order) {
  Bitmask m(parent_order);
  m.set(kIdentity);
  return Subgroup(std::move(m));
}

Subgroup Subgroup::whole(std::size_t parent_order) {
  Bitmask m(parent_order);
  m.fill();
  return Subgroup(std::move(m));
}

std::vector<Element> Subgroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  members_.for_each([&](std::size_t e) { out.push_back(static_cast<Element>(e)); });
  return out;
}

Subgroup intersection(Subgroup const& a, Subgroup const& b) {
  return Subgroup(a.members() & b.members());
}

bool GeneratingSequence::strictly_ascending() const {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::size_t prev = i == 0 ? 1 : chain[i - 1].order();
    if (chain[i].order() <= prev) return false;
  }
  return true;
}

GeneratingSequence make_generating_sequence(GroupTable const& g,
                                            std::span<Element const> elements) {
  GeneratingSequence seq;
  seq.elements.assign(elements.begin(), elements.end());
  std::vector<Element> prefix;
  for (Element x : elements) {
    prefix.push_back(x);
    seq.chain.push_back(closure(g, prefix));
  }
  return seq;
}

Subgroup closure(GroupTable const& g, std::span<Element const> seed) {
  Bitmask members(g.order());
  members.set(kIdentity);
  std::vector<Element> queue{kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Element y = queue[i];
    for (Element s : seed) {
      Element z = g.mul(y, s);
      if (!members.test(z)) {
        members.set(z);
        queue.push_back(z);
      }
    }
  }
  return Subgroup(std::move(members));
}

Subgroup closure(GroupTable const& g, std::initializer_list<Element> seed) {
  return closure(g, std::span<Element const>(seed.begin(), seed.size()));
}

namespace {

// Elements of h with the identity first, plus a generating set of h.
void subgroup_with_generators(GroupTable const& g, Subgroup const& h,
                              std::vector<Element>& elements, Bitmask& members,
                              std::vector<Element>& gens) {
  elements.assign({kIdentity});
  members = Bitmask(g.order());
  members.set(kIdentity);
  gens.clear();
  h.members().for_each([&](std::size_t e) {
    if (!members.test(e)) {
      detail::dimino_extend(g, elements, members, gens, static_cast<Element>(e));
    }
  });
}

}  // namespace

Subgroup join(GroupTable const& g, Subgroup const& h, std::span<Element const> extra) {
  std::vector<Element> elements;
  Bitmask members;
  std::vector<Element> gens;
  subgroup_with_generators(g, h, elements, members, gens);
  for (Element x : extra) detail::dimino_extend(g, elements, members, gens, x);
  return Subgroup(std::move(members));
}

NormalityResult is_normal(GroupTable const& g, Subgroup const& h) {
  NormalityResult result;
  auto elems = h.elements();
  for (Element x : g.generators()) {
    for (Element e : elems) {
      if (!h.contains(g.conj(x, e))) {
        result.normal = false;
        result.witness = std::make_pair(x, e);
        return result;
      }
    }
  }
  return result;
}

Subgroup derived_subgroup(GroupTable const& g) {
  std::vector<Element> elements{kIdentity};
  Bitmask members(g.order());
  members.set(kIdentity);
  std::vector<Element> gens;
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = x + 1; y < g.order(); ++y) {
      Element c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!members.test(c)) detail::dimino_extend(g, elements, members, gens, c);
    }
  }
  return Subgroup(std::move(members));
}

Quotient quotient(GroupTable const& g, Subgroup const& n) {
  if (auto normal = is_normal(g, n); !normal.normal) {
    auto [x, h] = *normal.witness;
    throw NotNormalError("subgroup is not normal: " + std::to_string(x) + " * " +
                             std::to_string(h) + " * " + std::to_string(x) + "^-1 lies outside it",
                         x, h);
  }
  constexpr Element kUnassigned = static_cast<Element>(-1);
  std::vector<Element> projection(g.order(), kUnassigned);
  std::vector<Element> reps;
  auto members = n.elements();
  for (Element x = 0; x < g.order(); ++x) {
    if (projection[x] != kUnassigned) continue;
    auto idx = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : members) projection[g.mul(x, m)] = idx;
  }
  std::size_t const q = reps.size();
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = projection[g.mul(reps[a], reps[b])];
  return Quotient{GroupTable::from_table(q, std::move(table)), std::move(projection)};
}

Embedded subgroup_as_group(GroupTable const& g, Subgroup const& h) {
  auto elems = h.elements();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  std::size_t const k = elems.size();
  std::vector<Element> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = local[g.mul(elems[a], elems[b])];
  return Embedded{GroupTable::from_table(k, std::move(table)), std::move(elems)};
}

GroupTable direct_product(GroupTable const& a, GroupTable const& b, Limits const& limits) {
  auto order = checked_mul(a.order(), b.order(), limits.order_cap);
  if (!order) {
    throw CapExceeded("direct product order " + std::to_string(a.order()) + " x " +
                          std::to_string(b.order()) + " exceeds the order cap " +
                          std::to_string(limits.order_cap),
                      limits.order_cap, a.order() * b.order());
  }
  std::size_t const n = *order;
  std::size_t const nb = b.order();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Element ai = a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      Element bi = b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      table[x * n + y] = static_cast<Element>(ai * nb + bi);
    }
  }
  return GroupTable::from_table(n, std::move(table), AssociativityCheck::kPolicy);
}

namespace {

struct PermutationHash {
  std::size_t operator()(Permutation const& p) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto v : p) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

Permutation compose(Permutation const& a, Permutation const& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

}  // namespace

PermutationGroup enumerate_permutations(std::size_t degree, std::span<Permutation const> generators,
                                        Limits const& limits, AssociativityCheck assoc) {
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    auto const& p = generators[gi];
    if (p.size() != degree) {
      throw FormatError("generator " + std::to_string(gi) + " has " + std::to_string(p.size()) +
                        " images, expected degree " + std::to_string(degree));
    }
    std::vector<bool> hit(degree, false);
    for (auto v : p) {
      if (v >= degree || hit[v]) {
        throw FormatError("generator " + std::to_string(gi) + " is not a permutation of 0.." +
                          std::to_string(degree == 0 ? 0 : degree - 1));
      }
      hit[v] = true;
    }
  }

  Permutation identity(degree);
  std::iota(identity.begin(), identity.end(), 0u);
  std::unordered_map<Permutation, Element, PermutationHash> index;
  std::vector<Permutation> perms{identity};
  // parent[x] * gens[via[x]] == x along the breadth-first tree.
  std::vector<Element> parent{0};
  std::vector<std::uint32_t> via{0};
  index.emplace(identity, 0);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      Permutation next = compose(perms[i], generators[gi]);
      if (index.contains(next)) continue;
      if (perms.size() >= limits.order_cap) {
        throw CapExceeded("permutation group order exceeds the order cap " +
                              std::to_string(limits.order_cap),
                          limits.order_cap, perms.size() + 1);
      }
      index.emplace(next, static_cast<Element>(perms.size()));
      perms.push_back(std::move(next));
      parent.push_back(static_cast<Element>(i));
      via.push_back(static_cast<std::uint32_t>(gi));
    }
  }

  std::size_t const n = perms.size();
  // right[gi][x] = x * gens[gi]
  std::vector<std::vector<Element>> right(generators.size(), std::vector<Element>(n));
  for (std::size_t gi = 0; gi < generators.size(); ++gi)
    for (std::size_t x = 0; x < n; ++x) right[gi][x] = index.at(compose(perms[x], generators[gi]));

  // a * b = (a * parent(b)) * gen; columns filled in breadth-first order.
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) table[a * n] = static_cast<Element>(a);
  for (std::size_t b = 1; b < n; ++b) {
    auto const& r = right[via[b]];
    Element pb = parent[b];
    for (std::size_t a = 0; a < n; ++a) table[a * n + b] = r[table[a * n + pb]];
  }
  return PermutationGroup{GroupTable::from_table(n, std::move(table), assoc), std::move(perms)};
}

GroupTable from_permutations(std::size_t degree, std::span<Permutation const> generators,
                             Limits const& limits, AssociativityCheck assoc) {
  return enumerate_permutations(degree, generators, limits, assoc).group;
}

}  // namespace unigen
