#include "unigen/structure.hpp"

#include <string>

#include "dimino.hpp"
#include "unigen/arith.hpp"
#include "unigen/errors.hpp"

namespace unigen {

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw Error("digit_sum: base must be at least 2, got " + std::to_string(p));
  std::uint64_t s = 0;
  for (; n; n /= p) s += n % p;
  return s;
}

namespace {

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

}  // namespace

std::vector<SubgroupIndex> sylow_subgroups(SubgroupLattice const& lat, std::uint64_t p) {
  std::uint64_t const target = p_part(lat.parent_order(), p);
  std::vector<SubgroupIndex> out;
  for (SubgroupIndex i = 0; i < lat.size(); ++i) {
    if (lat[i].order() == target) out.push_back(i);
  }
  return out;
}

bool is_nilpotent(GroupTable const& g, SubgroupLattice const& lat) {
  for (auto const& [p, e] : factorize(g.order())) {
    if (sylow_subgroups(lat, p).size() != 1) return false;
  }
  return true;
}

bool is_nilpotent_subgroup(SubgroupLattice const& lat, SubgroupIndex h) {
  Subgroup const& hs = lat[h];
  for (auto const& [p, e] : factorize(hs.order())) {
    std::uint64_t const target = p_part(hs.order(), p);
    int count = 0;
    for (SubgroupIndex i = 0; i <= h; ++i) {
      if (lat[i].order() == target && lat[i].is_subgroup_of(hs) && ++count > 1) return false;
    }
  }
  return true;
}

Subgroup p_core(SubgroupLattice const& lat, std::uint64_t p) {
  Subgroup core = lat[lat.top()];
  for (SubgroupIndex s : sylow_subgroups(lat, p)) core = intersection(core, lat[s]);
  return core;
}

Subgroup fitting(GroupTable const& g, SubgroupLattice const& lat) {
  Subgroup result = Subgroup::trivial(g.order());
  for (auto const& [p, e] : factorize(g.order())) {
    Subgroup core = p_core(lat, p);
    auto elems = core.elements();
    result = join(g, result, elems);
  }
  return result;
}

namespace {

Subgroup commutator_subgroup_of(GroupTable const& g, Subgroup const& h) {
  auto hs = h.elements();
  std::vector<Element> elements{kIdentity};
  Bitmask members(g.order());
  members.set(kIdentity);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      Element x = hs[i], y = hs[j];
      Element c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!members.test(c)) detail::dimino_extend(g, elements, members, gens, c);
    }
  }
  return Subgroup(std::move(members));
}

// <x> is normal and of prime order.
bool prime_order_normal(GroupTable const& g, Element x) {
  if (!is_prime(g.element_order(x))) return false;
  Bitmask powers(g.order());
  Element y = kIdentity;
  do {
    powers.set(y);
    y = g.mul(y, x);
  } while (y != kIdentity);
  for (Element s : g.generators()) {
    if (!powers.test(g.conj(s, x))) return false;
  }
  return true;
}

}  // namespace

bool is_solvable(GroupTable const& g) {
  Subgroup h = Subgroup::whole(g.order());
  while (h.order() > 1) {
    Subgroup next = commutator_subgroup_of(g, h);
    if (next.order() == h.order()) return false;
    h = std::move(next);
  }
  return true;
}

std::optional<bool> SupersolvableCache::lookup(GroupTable const& g) const {
  std::lock_guard lock(mutex_);
  auto it = map_.find(Key{g.order(), g.fingerprint()});
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void SupersolvableCache::store(GroupTable const& g, bool value) {
  std::lock_guard lock(mutex_);
  map_.try_emplace(Key{g.order(), g.fingerprint()}, value);
}

std::size_t SupersolvableCache::size() const {
  std::lock_guard lock(mutex_);
  return map_.size();
}

SupersolvableCache& SupersolvableCache::global() {
  static SupersolvableCache cache;
  return cache;
}

bool is_supersolvable(GroupTable const& g, SupersolvableCache* cache) {
  if (g.order() == 1) return true;
  if (cache) {
    if (auto hit = cache->lookup(g)) return *hit;
  }
  bool result = false;
  for (Element x = 1; x < g.order(); ++x) {
    if (prime_order_normal(g, x)) {
      Quotient q = quotient(g, closure(g, {x}));
      result = is_supersolvable(q.group, cache);
      break;
    }
  }
  if (cache) cache->store(g, result);
  return result;
}

bool is_supersolvable(GroupTable const& g, SubgroupLattice const& lat, SupersolvableCache* cache) {
  if (g.order() == 1) return true;
  for (std::size_t c = 0; c < lat.cyclic_count(); ++c) {
    Element x = lat.cyclic_generator(c);
    if (x != kIdentity && prime_order_normal(g, x)) {
      Quotient q = quotient(g, lat[lat.cyclic_subgroup(c)]);
      return is_supersolvable(q.group, cache);
    }
  }
  return false;
}

std::optional<ElementaryInfo> elementary_abelian(GroupTable const& g, Subgroup const& n) {
  auto elems = n.elements();
  if (elems.size() == 1) return ElementaryInfo{};
  std::uint64_t p = g.element_order(elems[1]);
  if (!is_prime(p)) return std::nullopt;
  for (Element v : elems) {
    if (v != kIdentity && g.element_order(v) != p) return std::nullopt;
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return std::nullopt;
  unsigned rank = 0;
  for (std::size_t s = elems.size(); s > 1; s /= p) ++rank;
  return ElementaryInfo{p, rank};
}

std::optional<std::uint64_t> scalar_action_on(GroupTable const& g, Subgroup const& n, Element x) {
  auto info = elementary_abelian(g, n);
  if (!info) throw Error("scalar_action_on: subgroup is not elementary abelian");
  if (info->p == 0) return 1;
  std::optional<std::uint64_t> lambda;
  bool first = true;
  for (Element v : n.elements()) {
    if (v == kIdentity) continue;
    Element c = g.conj(x, v);
    if (first) {
      Element power = v;
      for (std::uint64_t l = 1; l < info->p; ++l, power = g.mul(power, v)) {
        if (power == c) {
          lambda = l;
          break;
        }
      }
      if (!lambda) return std::nullopt;
      first = false;
    } else if (g.pow(v, *lambda) != c) {
      return std::nullopt;
    }
  }
  return lambda;
}

StructureReport structure_report(GroupTable const& g, SubgroupLattice const& lat,
                                 SupersolvableCache* cache) {
  StructureReport r;
  r.prime_factorization = factorize(g.order());
  r.is_nilpotent = true;
  for (auto const& [p, e] : r.prime_factorization) {
    bool unique = sylow_subgroups(lat, p).size() == 1;
    r.sylow_normal.emplace_back(p, unique);
    r.is_nilpotent = r.is_nilpotent && unique;
  }
  r.fitting = fitting(g, lat);
  r.derived = derived_subgroup(g);
  r.is_supersolvable = is_supersolvable(g, lat, cache);
  return r;
}

}  // namespace unigen
