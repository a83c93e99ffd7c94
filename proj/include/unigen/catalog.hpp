#ifndef UNIGEN_CATALOG_HPP
#define UNIGEN_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unigen/analysis.hpp"
#include "unigen/spec.hpp"

namespace unigen {

struct CatalogEntry {
  GroupSpec spec;
  std::string label;          // canonical spec text, or the file path
  std::string source = "builtin";
  std::uint64_t order = 1;
  std::optional<GroupMetrics> metrics;
};

// Constructor catalog up to `max_order`: C n, E(p,d) with d >= 2, D n with
// n >= 3, S n with n >= 3, A n with n >= 4, Scalar(p,k,q), and every
// pairwise direct product of non-trivial members. Sorted by (order, label).
// Not every isomorphism type of each order appears.
std::vector<CatalogEntry> build_catalog(std::uint64_t max_order);

}  // namespace unigen

#endif  // UNIGEN_CATALOG_HPP
