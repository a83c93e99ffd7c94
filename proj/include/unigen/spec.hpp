#ifndef UNIGEN_SPEC_HPP
#define UNIGEN_SPEC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unigen/group.hpp"

namespace unigen {

struct GroupSpec;

struct Cyclic {
  unsigned n;
};
struct Elementary {
  unsigned p, d;
};
struct Dihedral {
  unsigned n;  // order 2n
};
struct Symmetric {
  unsigned n;
};
struct Alternating {
  unsigned n;
};
// (C_p)^k semidirect C_q, the C_q generator acting as the canonical scalar.
struct ScalarProduct {
  unsigned p, k, q;
};
struct DirectProduct {
  std::vector<GroupSpec> factors;
};

struct GroupSpec {
  using Node = std::variant<Cyclic, Elementary, Dihedral, Symmetric, Alternating, ScalarProduct,
                            DirectProduct>;
  Node node;

  GroupSpec() : node(Cyclic{1}) {}
  template <typename T>
  GroupSpec(T t) : node(std::move(t)) {}  // NOLINT(google-explicit-constructor)

  // Group order, or nullopt past UINT64_MAX.
  std::optional<std::uint64_t> order() const;
};

bool operator==(GroupSpec const& a, GroupSpec const& b);

// Canonical text: "C12", "E(3,2)", "D4", "S4", "A5", "Scalar(5,2,2)", and
// products joined by " x ". Nested products are flattened.
std::string to_string(GroupSpec const& spec);

// Parses the mini-language:
//   expr := term ("x" term)*
//   term := "C" int | "E(" p "," d ")" | "D" int | "S" int | "A" int
//         | "Scalar(" p "," k "," q ")"
// Throws SpecError carrying the byte offset of the problem.
GroupSpec parse_spec(std::string_view text);

// Throws SpecError naming the violated constraint.
void validate(GroupSpec const& spec);

// Smallest integer > 1 of multiplicative order exactly q mod p.
unsigned canonical_scalar(unsigned p, unsigned q);

GroupTable build_from_spec(GroupSpec const& spec, Limits const& limits = {},
                           AssociativityCheck assoc = AssociativityCheck::kPolicy);

}  // namespace unigen

#endif  // UNIGEN_SPEC_HPP
