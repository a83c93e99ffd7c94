#include "unigen/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "dimino.hpp"
#include "unigen/arith.hpp"
#include "unigen/errors.hpp"

namespace unigen {

namespace {

constexpr SubgroupIndex kNone = std::numeric_limits<SubgroupIndex>::max();

// Insert-if-absent set of masks stored contiguously.
class MaskTable {
 public:
  explicit MaskTable(std::size_t bits) : bits_(bits), slots_(1024, 0) {}

  std::size_t size() const noexcept { return masks_.size(); }
  Bitmask const& mask(SubgroupIndex i) const noexcept { return masks_[i]; }
  std::uint64_t hash(SubgroupIndex i) const noexcept { return hashes_[i]; }

  // Returns (index, inserted).
  std::pair<SubgroupIndex, bool> insert(Bitmask const& m) {
    std::uint64_t h = m.hash();
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = h & mask;; s = (s + 1) & mask) {
      SubgroupIndex v = slots_[s];
      if (v == 0) {
        auto idx = static_cast<SubgroupIndex>(masks_.size());
        masks_.push_back(m);
        hashes_.push_back(h);
        slots_[s] = idx + 1;
        if (4 * masks_.size() > 3 * slots_.size()) grow();
        return {idx, true};
      }
      if (hashes_[v - 1] == h && masks_[v - 1] == m) return {v - 1, false};
    }
  }

 private:
  void grow() {
    std::vector<SubgroupIndex> next(slots_.size() * 2, 0);
    std::size_t mask = next.size() - 1;
    for (SubgroupIndex i = 0; i < masks_.size(); ++i) {
      std::size_t s = hashes_[i] & mask;
      while (next[s] != 0) s = (s + 1) & mask;
      next[s] = i + 1;
    }
    slots_ = std::move(next);
  }

  std::size_t bits_;
  std::vector<SubgroupIndex> slots_;
  std::vector<Bitmask> masks_;
  std::vector<std::uint64_t> hashes_;
};

}  // namespace

SubgroupLattice SubgroupLattice::enumerate(GroupTable const& g, Limits const& limits) {
  std::size_t const n = g.order();
  if (n > limits.order_cap) {
    throw CapExceeded("group order " + std::to_string(n) + " exceeds the order cap " +
                          std::to_string(limits.order_cap),
                      limits.order_cap, n);
  }

  // Anything larger than n / (smallest prime) must be the whole group.
  std::size_t const largest_proper = n == 1 ? 1 : n / factorize(n).front().first;

  MaskTable table(n);
  std::vector<std::vector<Element>> gens;

  auto check_cap = [&] {
    if (table.size() > limits.node_cap) {
      throw CapExceeded("subgroup count exceeds the node cap " + std::to_string(limits.node_cap),
                        limits.node_cap, table.size());
    }
  };

  Bitmask trivial(n);
  trivial.set(kIdentity);
  table.insert(trivial);
  gens.emplace_back();
  Bitmask whole(n);
  whole.fill();
  SubgroupIndex const whole_id = table.insert(whole).first;
  if (whole_id == gens.size()) {
    gens.emplace_back(g.generators().begin(), g.generators().end());
  }

  // Cyclic subgroups, each labelled by its smallest generator.
  std::vector<SubgroupIndex> cyclic_sub;  // discovery id
  std::vector<Element> cyclic_gen;
  std::vector<std::size_t> cyclic_of(n);
  std::vector<std::size_t> seen_cyclic;  // discovery id -> cyclic slot + 1
  for (Element x = 0; x < n; ++x) {
    Bitmask m(n);
    Element y = kIdentity;
    do {
      m.set(y);
      y = g.mul(y, x);
    } while (y != kIdentity);
    auto [id, inserted] = table.insert(m);
    if (inserted) gens.push_back(x == kIdentity ? std::vector<Element>{} : std::vector<Element>{x});
    check_cap();
    if (seen_cyclic.size() <= id) seen_cyclic.resize(id + 1, 0);
    if (seen_cyclic[id] == 0) {
      cyclic_sub.push_back(id);
      cyclic_gen.push_back(x);
      seen_cyclic[id] = cyclic_sub.size();
    }
    cyclic_of[x] = seen_cyclic[id] - 1;
  }
  std::size_t const cyc = cyclic_sub.size();

  std::vector<SubgroupIndex> joins;
  std::vector<Element> elements;
  std::vector<Element> work_gens;
  for (SubgroupIndex h = 0; h < table.size(); ++h) {
    joins.resize(static_cast<std::size_t>(h + 1) * cyc, kNone);
    Bitmask const h_mask = table.mask(h);
    std::vector<Element> h_elements;
    h_elements.reserve(h_mask.count());
    h_elements.push_back(kIdentity);
    h_mask.for_each([&](std::size_t e) {
      if (e != kIdentity) h_elements.push_back(static_cast<Element>(e));
    });
    for (std::size_t c = 0; c < cyc; ++c) {
      Element x = cyclic_gen[c];
      SubgroupIndex result;
      if (h_mask.test(x)) {
        result = h;
      } else if (h == 0) {
        result = cyclic_sub[c];
      } else {
        elements = h_elements;
        Bitmask members = h_mask;
        work_gens = gens[h];
        if (detail::dimino_extend(g, elements, members, work_gens, x, largest_proper)) {
          auto [id, inserted] = table.insert(members);
          if (inserted) {
            gens.push_back(work_gens);
            check_cap();
          }
          result = id;
        } else {
          result = whole_id;
        }
      }
      joins[static_cast<std::size_t>(h) * cyc + c] = result;
    }
  }

  // Sort by (order, key) and relabel.
  std::size_t const count = table.size();
  std::vector<SubgroupIndex> perm(count);
  std::iota(perm.begin(), perm.end(), SubgroupIndex{0});
  std::vector<std::size_t> orders(count);
  for (SubgroupIndex i = 0; i < count; ++i) orders[i] = table.mask(i).count();
  std::sort(perm.begin(), perm.end(), [&](SubgroupIndex a, SubgroupIndex b) {
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    return table.mask(a).compare_bytes(table.mask(b)) < 0;
  });
  std::vector<SubgroupIndex> rank(count);
  for (SubgroupIndex i = 0; i < count; ++i) rank[perm[i]] = i;

  SubgroupLattice lat;
  lat.parent_order_ = n;
  lat.subgroups_.reserve(count);
  lat.hashes_.reserve(count);
  lat.gens_offset_.push_back(0);
  for (SubgroupIndex i = 0; i < count; ++i) {
    lat.subgroups_.emplace_back(table.mask(perm[i]));
    lat.hashes_.push_back(table.hash(perm[i]));
    auto const& gi = gens[perm[i]];
    lat.gens_.insert(lat.gens_.end(), gi.begin(), gi.end());
    lat.gens_offset_.push_back(lat.gens_.size());
  }
  std::size_t slot_count = 16;
  while (slot_count < 2 * count) slot_count *= 2;
  lat.slots_.assign(slot_count, 0);
  for (SubgroupIndex i = 0; i < count; ++i) {
    std::size_t s = lat.hashes_[i] & (slot_count - 1);
    while (lat.slots_[s] != 0) s = (s + 1) & (slot_count - 1);
    lat.slots_[s] = i + 1;
  }

  // Cyclic subgroups in order of their smallest generator.
  lat.cyclic_index_.resize(cyc);
  lat.cyclic_generator_ = cyclic_gen;
  lat.cyclic_of_ = cyclic_of;
  for (std::size_t c = 0; c < cyc; ++c) lat.cyclic_index_[c] = rank[cyclic_sub[c]];

  lat.joins_.assign(count * cyc, 0);
  for (SubgroupIndex old = 0; old < count; ++old) {
    std::size_t base = static_cast<std::size_t>(rank[old]) * cyc;
    for (std::size_t c = 0; c < cyc; ++c) {
      lat.joins_[base + c] = rank[joins[static_cast<std::size_t>(old) * cyc + c]];
    }
  }

  // Covers of H are the minimal members of {<H, x> : x not in H}.
  std::vector<std::vector<SubgroupIndex>> above(count), below(count);
  std::vector<SubgroupIndex> cand;
  for (SubgroupIndex h = 0; h < count; ++h) {
    cand.clear();
    for (std::size_t c = 0; c < cyc; ++c) {
      SubgroupIndex k = lat.join_cyclic(h, c);
      if (k != h) cand.push_back(k);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::size_t const h_order = lat.subgroups_[h].order();
    for (std::size_t i = 0; i < cand.size(); ++i) {
      Subgroup const& k = lat.subgroups_[cand[i]];
      bool minimal = true;
      if (!is_prime(k.order() / h_order)) {
        for (std::size_t j = 0; j < i && minimal; ++j) {
          Subgroup const& l = lat.subgroups_[cand[j]];
          if (l.order() < k.order() && k.order() % l.order() == 0 && l.is_subgroup_of(k)) {
            minimal = false;
          }
        }
      }
      if (minimal) {
        above[h].push_back(cand[i]);
        below[cand[i]].push_back(h);
      }
    }
  }
  lat.above_offset_.push_back(0);
  lat.below_offset_.push_back(0);
  for (SubgroupIndex i = 0; i < count; ++i) {
    lat.above_.insert(lat.above_.end(), above[i].begin(), above[i].end());
    lat.above_offset_.push_back(lat.above_.size());
    lat.below_.insert(lat.below_.end(), below[i].begin(), below[i].end());
    lat.below_offset_.push_back(lat.below_.size());
  }
  return lat;
}

std::optional<SubgroupIndex> SubgroupLattice::find(Bitmask const& members) const {
  if (members.size() != parent_order_ || slots_.empty()) return std::nullopt;
  std::uint64_t h = members.hash();
  std::size_t mask = slots_.size() - 1;
  for (std::size_t s = h & mask;; s = (s + 1) & mask) {
    SubgroupIndex v = slots_[s];
    if (v == 0) return std::nullopt;
    if (hashes_[v - 1] == h && subgroups_[v - 1].members() == members) return v - 1;
  }
}

std::vector<std::pair<SubgroupIndex, SubgroupIndex>> SubgroupLattice::maximal_edges() const {
  std::vector<std::pair<SubgroupIndex, SubgroupIndex>> out;
  for (SubgroupIndex h = 0; h < size(); ++h)
    for (SubgroupIndex k : minimal_above(h)) out.emplace_back(h, k);
  return out;
}

ChainProfile chain_profile(SubgroupLattice const& lat) {
  std::size_t const s = lat.size();
  ChainProfile p;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  p.longest_from_bottom.assign(s, -1);
  p.shortest_from_bottom.assign(s, kInf);
  p.longest_to_top.assign(s, -1);
  p.shortest_to_top.assign(s, kInf);
  // Index order is a topological order (sorted by subgroup order).
  p.longest_from_bottom[0] = p.shortest_from_bottom[0] = 0;
  for (SubgroupIndex k = 1; k < s; ++k) {
    for (SubgroupIndex h : lat.maximal_below(k)) {
      p.longest_from_bottom[k] = std::max(p.longest_from_bottom[k], p.longest_from_bottom[h] + 1);
      p.shortest_from_bottom[k] = std::min(p.shortest_from_bottom[k], p.shortest_from_bottom[h] + 1);
    }
  }
  SubgroupIndex const top = lat.top();
  p.longest_to_top[top] = p.shortest_to_top[top] = 0;
  for (SubgroupIndex h = top; h-- > 0;) {
    for (SubgroupIndex k : lat.minimal_above(h)) {
      p.longest_to_top[h] = std::max(p.longest_to_top[h], p.longest_to_top[k] + 1);
      p.shortest_to_top[h] = std::min(p.shortest_to_top[h], p.shortest_to_top[k] + 1);
    }
  }
  return p;
}

ChainReport chain_report(SubgroupLattice const& lat) {
  ChainProfile p = chain_profile(lat);
  ChainReport r;
  r.length_ell = p.longest_to_top[0];
  r.depth_lambda = p.shortest_to_top[0];
  auto walk = [&](std::vector<int> const& to_top) {
    std::vector<SubgroupIndex> chain{0};
    SubgroupIndex cur = 0;
    while (cur != lat.top()) {
      for (SubgroupIndex k : lat.minimal_above(cur)) {
        if (to_top[k] == to_top[cur] - 1) {
          cur = k;
          break;
        }
      }
      chain.push_back(cur);
    }
    return chain;
  };
  r.longest_chain = walk(p.longest_to_top);
  r.shortest_chain = walk(p.shortest_to_top);
  return r;
}

std::vector<SubgroupIndex> maximal_subgroups(SubgroupLattice const& lat) {
  auto below = lat.maximal_below(lat.top());
  return {below.begin(), below.end()};
}

Subgroup frattini(SubgroupLattice const& lat) {
  Subgroup result = lat[lat.top()];
  for (SubgroupIndex m : lat.maximal_below(lat.top())) result = intersection(result, lat[m]);
  return result;
}

std::vector<std::pair<SubgroupIndex, SubgroupIndex>> cyclic_extension_edges(
    SubgroupLattice const& lat) {
  std::vector<std::pair<SubgroupIndex, SubgroupIndex>> out;
  std::vector<SubgroupIndex> targets;
  for (SubgroupIndex h = 0; h < lat.size(); ++h) {
    targets.clear();
    for (std::size_t c = 0; c < lat.cyclic_count(); ++c) {
      SubgroupIndex k = lat.join_cyclic(h, c);
      if (k != h) targets.push_back(k);
    }
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (SubgroupIndex k : targets) out.emplace_back(h, k);
  }
  return out;
}

bool is_unrefinable_chain(SubgroupLattice const& lat, std::span<SubgroupIndex const> chain) {
  if (chain.empty() || chain.front() != lat.bottom() || chain.back() != lat.top()) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    Subgroup const& h = lat[chain[i]];
    Subgroup const& k = lat[chain[i + 1]];
    if (!(h.is_subgroup_of(k)) || h.order() >= k.order()) return false;
    for (Subgroup const& l : lat.subgroups()) {
      if (l.order() > h.order() && l.order() < k.order() && h.is_subgroup_of(l) &&
          l.is_subgroup_of(k)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace unigen
