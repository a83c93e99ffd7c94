#ifndef UNIGEN_LATTICE_HPP
#define UNIGEN_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "unigen/group.hpp"

namespace unigen {

using SubgroupIndex = std::uint32_t;

// Every subgroup of a finite group, sorted by (order, canonical key), with
// the covering relation ("H is maximal in K") and the table of joins
// <H, x> for every subgroup H and cyclic subgroup <x>.
//
// Index 0 is the trivial subgroup and index size()-1 the whole group.
class SubgroupLattice {
 public:
  // Seeds with the cyclic subgroups and joins (subgroup, cyclic subgroup)
  // pairs until nothing new appears. Throws CapExceeded past
  // limits.node_cap subgroups or limits.order_cap elements.
  static SubgroupLattice enumerate(GroupTable const& g, Limits const& limits = {});

  std::size_t parent_order() const noexcept { return parent_order_; }
  std::size_t size() const noexcept { return subgroups_.size(); }

  Subgroup const& operator[](SubgroupIndex i) const noexcept { return subgroups_[i]; }
  std::span<Subgroup const> subgroups() const noexcept { return subgroups_; }

  SubgroupIndex bottom() const noexcept { return 0; }
  SubgroupIndex top() const noexcept { return static_cast<SubgroupIndex>(size() - 1); }

  std::optional<SubgroupIndex> find(Bitmask const& members) const;

  // Maximal subgroups of i, ascending.
  std::span<SubgroupIndex const> maximal_below(SubgroupIndex i) const noexcept {
    return {below_.data() + below_offset_[i], below_offset_[i + 1] - below_offset_[i]};
  }
  // Subgroups in which i is maximal, ascending.
  std::span<SubgroupIndex const> minimal_above(SubgroupIndex i) const noexcept {
    return {above_.data() + above_offset_[i], above_offset_[i + 1] - above_offset_[i]};
  }

  // Edges (H, K) with H maximal in K, sorted.
  std::vector<std::pair<SubgroupIndex, SubgroupIndex>> maximal_edges() const;

  std::size_t cyclic_count() const noexcept { return cyclic_index_.size(); }
  SubgroupIndex cyclic_subgroup(std::size_t c) const noexcept { return cyclic_index_[c]; }
  // Smallest element generating cyclic subgroup c.
  Element cyclic_generator(std::size_t c) const noexcept { return cyclic_generator_[c]; }
  // The c with <x> == cyclic_subgroup(c).
  std::size_t cyclic_of(Element x) const noexcept { return cyclic_of_[x]; }

  // <H, C_c>.
  SubgroupIndex join_cyclic(SubgroupIndex h, std::size_t c) const noexcept {
    return joins_[static_cast<std::size_t>(h) * cyclic_count() + c];
  }
  SubgroupIndex join_element(SubgroupIndex h, Element x) const noexcept {
    return join_cyclic(h, cyclic_of(x));
  }

  // Generators recorded when the subgroup was first reached.
  std::span<Element const> generators(SubgroupIndex i) const noexcept {
    return {gens_.data() + gens_offset_[i], gens_offset_[i + 1] - gens_offset_[i]};
  }

  bool contains(SubgroupIndex outer, SubgroupIndex inner) const noexcept {
    return subgroups_[inner].is_subgroup_of(subgroups_[outer]);
  }

 private:
  std::size_t parent_order_ = 1;
  std::vector<Subgroup> subgroups_;
  std::vector<std::uint64_t> hashes_;
  std::vector<SubgroupIndex> slots_;  // open addressing, index+1, 0 empty
  std::vector<SubgroupIndex> below_, above_;
  std::vector<std::size_t> below_offset_, above_offset_;
  std::vector<SubgroupIndex> cyclic_index_;
  std::vector<Element> cyclic_generator_;
  std::vector<std::size_t> cyclic_of_;
  std::vector<SubgroupIndex> joins_;
  std::vector<Element> gens_;
  std::vector<std::size_t> gens_offset_;
};

// Lengths count steps, so a chain of k+1 subgroups has length k.
struct ChainReport {
  int length_ell = 0;
  int depth_lambda = 0;
  std::vector<SubgroupIndex> longest_chain;   // bottom to top
  std::vector<SubgroupIndex> shortest_chain;  // bottom to top
};

ChainReport chain_report(SubgroupLattice const& lat);

// Longest and shortest unrefinable chain lengths from the bottom to each
// subgroup and from each subgroup to the top. Interval [1, H] is the lattice
// of H and [N, G] that of G/N when N is normal.
struct ChainProfile {
  std::vector<int> longest_from_bottom;
  std::vector<int> shortest_from_bottom;
  std::vector<int> longest_to_top;
  std::vector<int> shortest_to_top;
};

ChainProfile chain_profile(SubgroupLattice const& lat);

std::vector<SubgroupIndex> maximal_subgroups(SubgroupLattice const& lat);

// Intersection of the maximal subgroups; the whole (trivial) group when
// there are none.
Subgroup frattini(SubgroupLattice const& lat);

// Pairs (H, K), H < K, with K = <H, x> for some x in K. Sorted.
std::vector<std::pair<SubgroupIndex, SubgroupIndex>> cyclic_extension_edges(
    SubgroupLattice const& lat);

// Checks that consecutive chain terms are proper and maximal in each other
// without consulting the covering relation.
bool is_unrefinable_chain(SubgroupLattice const& lat, std::span<SubgroupIndex const> chain);

}  // namespace unigen

#endif  // UNIGEN_LATTICE_HPP
