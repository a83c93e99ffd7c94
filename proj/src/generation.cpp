#include "unigen/generation.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "unigen/errors.hpp"

namespace unigen {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max() / 2;

struct VectorHash {
  std::size_t operator()(std::vector<SubgroupIndex> const& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

MinimalGenerators minimal_generators(GroupTable const& g, SubgroupLattice const& lat) {
  MinimalGenerators out;
  if (lat.size() == 1) return out;
  std::size_t const s = lat.size();
  std::vector<int> level(s, kUnreached);
  std::vector<SubgroupIndex> parent(s, 0);
  std::vector<Element> via(s, kIdentity);
  level[0] = 0;
  std::vector<SubgroupIndex> frontier{0};
  SubgroupIndex const top = lat.top();
  for (int depth = 1; level[top] == kUnreached; ++depth) {
    std::vector<SubgroupIndex> next;
    for (SubgroupIndex h : frontier) {
      for (std::size_t c = 0; c < lat.cyclic_count(); ++c) {
        SubgroupIndex k = lat.join_cyclic(h, c);
        if (level[k] != kUnreached) continue;
        level[k] = depth;
        parent[k] = h;
        via[k] = lat.cyclic_generator(c);
        next.push_back(k);
      }
    }
    frontier = std::move(next);
  }
  out.d = level[top];
  std::vector<Element> elems;
  for (SubgroupIndex cur = top; cur != 0; cur = parent[cur]) elems.push_back(via[cur]);
  std::reverse(elems.begin(), elems.end());
  out.witness = make_generating_sequence(g, elems);
  return out;
}

std::vector<int> generator_numbers(SubgroupLattice const& lat) {
  std::vector<int> d(lat.size(), kUnreached);
  d[0] = 0;
  for (SubgroupIndex h = 0; h < lat.size(); ++h) {
    for (std::size_t c = 0; c < lat.cyclic_count(); ++c) {
      SubgroupIndex k = lat.join_cyclic(h, c);
      if (k != h) d[k] = std::min(d[k], d[h] + 1);
    }
  }
  return d;
}

int relative_generator_number(SubgroupLattice const& lat, SubgroupIndex base,
                              SubgroupIndex target) {
  if (!lat.contains(target, base)) return -1;
  if (base == target) return 0;
  Subgroup const& t = lat[target];
  std::vector<std::size_t> inside;
  for (std::size_t c = 0; c < lat.cyclic_count(); ++c) {
    if (t.contains(lat.cyclic_generator(c))) inside.push_back(c);
  }
  std::vector<char> seen(lat.size(), 0);
  seen[base] = 1;
  std::vector<SubgroupIndex> frontier{base};
  for (int depth = 1; !frontier.empty(); ++depth) {
    std::vector<SubgroupIndex> next;
    for (SubgroupIndex h : frontier) {
      for (std::size_t c : inside) {
        SubgroupIndex k = lat.join_cyclic(h, c);
        if (k == target) return depth;
        if (!seen[k]) {
          seen[k] = 1;
          next.push_back(k);
        }
      }
    }
    frontier = std::move(next);
  }
  return -1;
}

bool is_independent(GroupTable const& g, std::span<Element const> s) {
  if (closure(g, s).order() != g.order()) {
    throw NotGeneratingError("the given set does not generate the group");
  }
  std::vector<Element> rest;
  for (std::size_t i = 0; i < s.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != i) rest.push_back(s[j]);
    if (closure(g, rest).order() == g.order()) return false;
  }
  return true;
}

namespace {

class IndependentSearch {
 public:
  IndependentSearch(SubgroupLattice const& lat)
      : lat_(lat), up_(chain_profile(lat).longest_to_top),
        avoid_(lat.size() * lat.cyclic_count(), -1) {}

  MaxIndependent run() {
    std::vector<SubgroupIndex> deletions;
    extend(lat_.bottom(), deletions);
    return MaxIndependent{best_, best_witness_};
  }

 private:
  // Longest chain rising from h through subgroups that miss cyclic subgroup c.
  int avoiding(SubgroupIndex h, std::size_t c) {
    auto& memo = avoid_[h * lat_.cyclic_count() + c];
    if (memo >= 0) return memo;
    int best = 0;
    Element const x = lat_.cyclic_generator(c);
    for (SubgroupIndex k : lat_.minimal_above(h)) {
      if (!lat_[k].contains(x)) best = std::max(best, 1 + avoiding(k, c));
    }
    memo = static_cast<std::int8_t>(best);
    return best;
  }

  // Every later element extends a strict chain above each <T \ t> that
  // never picks up t, as well as a strict chain above <T>.
  int room(SubgroupIndex top, std::vector<SubgroupIndex> const& deletions) {
    int r = up_[top];
    for (std::size_t i = 0; i < deletions.size() && r > 0; ++i) {
      r = std::min(r, avoiding(deletions[i], cyclics_[i]));
    }
    return r;
  }

  // `deletions[i]` is <T without its i-th element>; path_ holds T.
  void extend(SubgroupIndex top, std::vector<SubgroupIndex> const& deletions) {
    int const size = static_cast<int>(path_.size());
    if (size + room(top, deletions) <= best_) return;

    std::vector<SubgroupIndex> key;
    key.reserve(deletions.size() + 1);
    key.push_back(top);
    key.insert(key.end(), deletions.begin(), deletions.end());
    std::sort(key.begin() + 1, key.end());
    if (!visited_.insert(std::move(key)).second) return;

    struct Move {
      std::size_t cyclic;
      SubgroupIndex next;
    };
    std::vector<Move> moves;
    for (std::size_t c = 0; c < lat_.cyclic_count(); ++c) {
      SubgroupIndex next = lat_.join_cyclic(top, c);
      if (next != top) moves.push_back({c, next});
    }
    // Prefer steps leaving the longest chain above.
    std::stable_sort(moves.begin(), moves.end(), [&](Move const& a, Move const& b) {
      return up_[a.next] > up_[b.next];
    });

    std::vector<SubgroupIndex> next_deletions(deletions.size() + 1);
    for (Move const& mv : moves) {
      if (size + 1 + up_[mv.next] <= best_) continue;
      bool redundant = false;
      for (std::size_t i = 0; i < deletions.size(); ++i) {
        next_deletions[i] = lat_.join_cyclic(deletions[i], mv.cyclic);
        if (next_deletions[i] == mv.next) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      next_deletions[deletions.size()] = top;
      path_.push_back(lat_.cyclic_generator(mv.cyclic));
      cyclics_.push_back(mv.cyclic);
      if (mv.next == lat_.top()) {
        if (size + 1 > best_) {
          best_ = size + 1;
          best_witness_ = path_;
        }
      } else {
        extend(mv.next, next_deletions);
      }
      cyclics_.pop_back();
      path_.pop_back();
    }
  }

  SubgroupLattice const& lat_;
  std::vector<int> up_;
  std::vector<std::int8_t> avoid_;
  std::vector<Element> path_;
  std::vector<std::size_t> cyclics_;
  int best_ = 0;
  std::vector<Element> best_witness_;
  std::unordered_set<std::vector<SubgroupIndex>, VectorHash> visited_;
};

}  // namespace

MaxIndependent max_independent_size(GroupTable const& g, SubgroupLattice const& lat) {
  if (lat.size() == 1) return {};
  Subgroup const phi = frattini(lat);
  if (phi.order() == 1) return IndependentSearch(lat).run();

  // A set generates G exactly when its image generates G/Phi(G), and the
  // same holds after deleting any one element, so m(G) = m(G/Phi(G)).
  Quotient q = quotient(g, phi);
  Limits limits;
  limits.order_cap = std::max(limits.order_cap, q.group.order());
  auto qlat = SubgroupLattice::enumerate(q.group, limits);
  MaxIndependent reduced = IndependentSearch(qlat).run();
  std::vector<Element> preimage(q.group.order(), kIdentity);
  for (Element x = g.order(); x-- > 0;) preimage[q.projection[x]] = x;
  for (Element& y : reduced.witness) y = preimage[y];
  return reduced;
}

bool is_d_uniformly_generated(SubgroupLattice const& lat, int d) {
  if (d < 1) throw Error("d must be at least 1, got " + std::to_string(d));
  std::vector<SubgroupIndex> reach{lat.bottom()};
  for (int step = 0; step < d; ++step) {
    std::vector<SubgroupIndex> next;
    for (SubgroupIndex h : reach) {
      for (std::size_t c = 0; c < lat.cyclic_count(); ++c) {
        SubgroupIndex k = lat.join_cyclic(h, c);
        if (k != h) next.push_back(k);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    reach = std::move(next);
    if (reach.empty()) return false;
  }
  return reach.size() == 1 && reach.front() == lat.top();
}

bool is_uniformly_generated_behavioral(GroupTable const& g, SubgroupLattice const& lat) {
  if (lat.size() == 1) return true;
  return is_d_uniformly_generated(lat, minimal_generators(g, lat).d);
}

namespace {

void scan_tuples(GroupTable const& g, int d, std::vector<Element>& prefix, std::size_t prev_order,
                 TupleOracleResult& result) {
  for (Element x = 0; x < g.order(); ++x) {
    prefix.push_back(x);
    Subgroup s = closure(g, prefix);
    if (s.order() > prev_order) {
      if (static_cast<int>(prefix.size()) == d) {
        result.some_chain_exists = true;
        if (s.order() != g.order()) result.every_chain_reaches_group = false;
      } else {
        scan_tuples(g, d, prefix, s.order(), result);
      }
    }
    prefix.pop_back();
  }
}

}  // namespace

TupleOracleResult tuple_oracle(GroupTable const& g, int d) {
  if (d < 1) throw Error("d must be at least 1, got " + std::to_string(d));
  double tuples = 1;
  for (int i = 0; i < d; ++i) tuples *= static_cast<double>(g.order());
  if (tuples > 1e7) {
    throw CapExceeded("tuple oracle limited to |G|^d <= 10^7", 10'000'000,
                      static_cast<std::uint64_t>(std::min(tuples, 1e18)));
  }
  TupleOracleResult result;
  std::vector<Element> prefix;
  scan_tuples(g, d, prefix, 1, result);
  return result;
}

}  // namespace unigen
