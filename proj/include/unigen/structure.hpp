#ifndef UNIGEN_STRUCTURE_HPP
#define UNIGEN_STRUCTURE_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "unigen/group.hpp"
#include "unigen/lattice.hpp"

namespace unigen {

// Sum of the base-p digits of n. Throws Error for p < 2.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t p);

// Sylow p-subgroups read off the lattice by order.
std::vector<SubgroupIndex> sylow_subgroups(SubgroupLattice const& lat, std::uint64_t p);

// Every Sylow subgroup is unique.
bool is_nilpotent(GroupTable const& g, SubgroupLattice const& lat);

// Nilpotency of a subgroup H, judged on the interval [1, H].
bool is_nilpotent_subgroup(SubgroupLattice const& lat, SubgroupIndex h);

// O_p(G): intersection of the Sylow p-subgroups.
Subgroup p_core(SubgroupLattice const& lat, std::uint64_t p);

// Join of the p-cores over the primes dividing |G|.
Subgroup fitting(GroupTable const& g, SubgroupLattice const& lat);

// The derived series reaches the trivial group.
bool is_solvable(GroupTable const& g);

// Thread-safe insert-if-absent cache of supersolvability keyed by the
// Cayley table.
class SupersolvableCache {
 public:
  std::optional<bool> lookup(GroupTable const& g) const;
  void store(GroupTable const& g, bool value);
  std::size_t size() const;

  static SupersolvableCache& global();

 private:
  struct Key {
    std::size_t order;
    std::uint64_t fingerprint;
    bool operator==(Key const&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(Key const& k) const noexcept {
      return static_cast<std::size_t>(k.fingerprint ^ (k.order * 0x9e3779b97f4a7c15ull));
    }
  };
  mutable std::mutex mutex_;
  std::unordered_map<Key, bool, KeyHash> map_;
};

// True iff G is trivial or has a normal subgroup N of prime order with G/N
// supersolvable. Since quotients of supersolvable groups are supersolvable,
// one such N decides the question. Never consults chain lengths.
bool is_supersolvable(GroupTable const& g, SupersolvableCache* cache = &SupersolvableCache::global());
bool is_supersolvable(GroupTable const& g, SubgroupLattice const& lat,
                      SupersolvableCache* cache = &SupersolvableCache::global());

// Abelian of prime exponent p (p = 0 for the trivial subgroup).
struct ElementaryInfo {
  std::uint64_t p = 0;
  unsigned rank = 0;
};
std::optional<ElementaryInfo> elementary_abelian(GroupTable const& g, Subgroup const& n);

// The exponent lambda in 1..p-1 with x v x^-1 = v^lambda for every v in n,
// if one exists. Throws Error when n is not elementary abelian; returns 1
// for the trivial subgroup.
std::optional<std::uint64_t> scalar_action_on(GroupTable const& g, Subgroup const& n, Element x);

struct StructureReport {
  std::vector<std::pair<std::uint64_t, unsigned>> prime_factorization;
  std::vector<std::pair<std::uint64_t, bool>> sylow_normal;  // prime -> unique Sylow
  Subgroup fitting;
  Subgroup derived;
  bool is_nilpotent = false;
  bool is_supersolvable = false;
};

StructureReport structure_report(GroupTable const& g, SubgroupLattice const& lat,
                                 SupersolvableCache* cache = &SupersolvableCache::global());

}  // namespace unigen

#endif  // UNIGEN_STRUCTURE_HPP
