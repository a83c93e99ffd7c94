#include "unigen/catalog.hpp"

#include <algorithm>
#include <set>

#include "unigen/arith.hpp"

namespace unigen {

std::vector<CatalogEntry> build_catalog(std::uint64_t max_order) {
  std::vector<GroupSpec> base;
  for (unsigned n = 1; n <= max_order; ++n) base.push_back(Cyclic{n});
  for (unsigned p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t order = static_cast<std::uint64_t>(p) * p;
    for (unsigned d = 2; order <= max_order; ++d, order *= p) base.push_back(Elementary{p, d});
  }
  for (unsigned n = 3; 2ull * n <= max_order; ++n) base.push_back(Dihedral{n});
  {
    std::uint64_t f = 2;
    for (unsigned n = 3; f * n <= max_order; ++n) {
      f *= n;
      base.push_back(Symmetric{n});
    }
  }
  {
    std::uint64_t half = 3;  // |A_3|
    for (unsigned n = 4; half * n <= max_order; ++n) {
      half *= n;
      base.push_back(Alternating{n});
    }
  }
  for (unsigned p = 3; 2ull * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned q = 2; q < p; ++q) {
      if (!is_prime(q) || (p - 1) % q != 0) continue;
      std::uint64_t order = static_cast<std::uint64_t>(p) * q;
      for (unsigned k = 1; order <= max_order; ++k, order *= p) base.push_back(ScalarProduct{p, k, q});
    }
  }

  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  auto add = [&](GroupSpec spec) {
    std::string label = to_string(spec);
    if (!seen.insert(label).second) return;
    std::uint64_t order = *spec.order();
    out.push_back(CatalogEntry{std::move(spec), std::move(label), "builtin", order, std::nullopt});
  };
  for (auto const& s : base) add(s);
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::uint64_t oi = *base[i].order();
    if (oi == 1) continue;
    for (std::size_t j = i; j < base.size(); ++j) {
      std::uint64_t oj = *base[j].order();
      if (oj == 1 || oi * oj > max_order) continue;
      add(DirectProduct{{base[i], base[j]}});
    }
  }
  std::sort(out.begin(), out.end(), [](CatalogEntry const& a, CatalogEntry const& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.label < b.label;
  });
  return out;
}

}  // namespace unigen
