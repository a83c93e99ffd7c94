#ifndef UNIGEN_GENERATION_HPP
#define UNIGEN_GENERATION_HPP

#include <span>
#include <vector>

#include "unigen/group.hpp"
#include "unigen/lattice.hpp"

namespace unigen {

struct MinimalGenerators {
  int d = 0;
  GeneratingSequence witness;
};

// d(G) by breadth-first search over the cyclic-extension graph: level k
// holds every <x1, ..., xk>. d(trivial) = 0.
MinimalGenerators minimal_generators(GroupTable const& g, SubgroupLattice const& lat);

// d(H) for every subgroup H in one pass: d(H) = 1 + min d(K) over K with
// <K, x> = H for some x outside K.
std::vector<int> generator_numbers(SubgroupLattice const& lat);

// Least k with <base, x1, ..., xk> = target, i.e. d(target / base) when base
// is normal in target. -1 when base is not contained in target.
int relative_generator_number(SubgroupLattice const& lat, SubgroupIndex base, SubgroupIndex target);

// True iff removing any one element of `s` leaves a proper subgroup.
// Throws NotGeneratingError when `s` does not generate g.
bool is_independent(GroupTable const& g, std::span<Element const> s);

struct MaxIndependent {
  int m = 0;
  std::vector<Element> witness;
};

// m(G), the largest independent generating set, by depth-first extension
// over subgroup chains. States are (<T>, {<T \ t> : t in T}); the search is
// pruned by the longest chain remaining above <T>. Runs on G/Phi(G) when the
// Frattini subgroup is nontrivial and lifts the witness back to G.
MaxIndependent max_independent_size(GroupTable const& g, SubgroupLattice const& lat);

// Every strictly ascending chain 1 < <x1> < ... < <x1..xd> ends at G, and at
// least one such chain exists. Throws Error for d < 1.
bool is_d_uniformly_generated(SubgroupLattice const& lat, int d);

// d(G)-uniform generation; true for the trivial group.
bool is_uniformly_generated_behavioral(GroupTable const& g, SubgroupLattice const& lat);

struct TupleOracleResult {
  bool every_chain_reaches_group = true;
  bool some_chain_exists = false;
  bool uniform() const noexcept { return every_chain_reaches_group && some_chain_exists; }
};

// Literal scan of G^d using kernel closures only. Throws CapExceeded when
// |G|^d > 10^7.
TupleOracleResult tuple_oracle(GroupTable const& g, int d);

}  // namespace unigen

#endif  // UNIGEN_GENERATION_HPP
