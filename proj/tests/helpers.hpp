#ifndef UNIGEN_TESTS_HELPERS_HPP
#define UNIGEN_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "oracles.hpp"
#include "unigen/catalog.hpp"
#include "unigen/lattice.hpp"
#include "unigen/spec.hpp"

namespace testing {

inline unigen::GroupTable build(std::string const& spec) { return unigen::build_from_spec(unigen::parse_spec(spec)); }

inline std::vector<unigen::CatalogEntry> catalog_upto(std::uint64_t n) { return unigen::build_catalog(n); }

inline oracle::Set to_set(unigen::Subgroup const& s) {
  oracle::Set out(s.parent_order(), false);
  for (auto x : s.elements()) out[x] = true;
  return out;
}

inline unigen::Subgroup from_set(oracle::Set const& s) {
  unigen::Bitmask m(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i]) m.set(i);
  return unigen::Subgroup(m);
}

}  // namespace testing

#endif  // UNIGEN_TESTS_HELPERS_HPP
