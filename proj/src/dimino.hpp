#ifndef UNIGEN_SRC_DIMINO_HPP
#define UNIGEN_SRC_DIMINO_HPP

#include <cstddef>
#include <vector>

#include "unigen/bitmask.hpp"
#include "unigen/group.hpp"

namespace unigen::detail {

// Grows `elements` (a subgroup H listed with the identity first, mirrored in
// `members`) to <H, x> by right-coset extension. `gens` must generate H on
// entry; x is appended on return. Returns false without finishing once the
// size would exceed `size_limit`; the contents are then unspecified.
inline bool dimino_extend(GroupTable const& g, std::vector<Element>& elements, Bitmask& members,
                          std::vector<Element>& gens, Element x,
                          std::size_t size_limit = static_cast<std::size_t>(-1)) {
  if (members.test(x)) return true;
  gens.push_back(x);
  std::size_t const block = elements.size();
  auto add_coset = [&](Element t) {
    for (std::size_t i = 0; i < block; ++i) {
      Element e = g.mul(elements[i], t);
      members.set(e);
      elements.push_back(e);
    }
  };
  if (2 * block > size_limit) return false;
  add_coset(x);
  for (std::size_t rep = block; rep < elements.size(); rep += block) {
    Element r = elements[rep];
    for (Element s : gens) {
      Element t = g.mul(r, s);
      if (!members.test(t)) {
        if (elements.size() + block > size_limit) return false;
        add_coset(t);
      }
    }
  }
  return true;
}

}  // namespace unigen::detail

#endif  // UNIGEN_SRC_DIMINO_HPP
