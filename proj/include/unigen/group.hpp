#ifndef UNIGEN_GROUP_HPP
#define UNIGEN_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unigen/bitmask.hpp"

namespace unigen {

using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

// Size limits applied wherever a table or lattice is materialized.
struct Limits {
  std::size_t order_cap = 2520;   // enough for Alt(7)
  std::size_t node_cap = 100000;  // subgroups per lattice

  // Defaults, with UNIGEN_ORDER_CAP overriding order_cap when set.
  static Limits from_env();
};

enum class AssociativityCheck {
  kPolicy,  // exhaustive up to order 64, 1000 sampled triples above
  kFull,
  kSkip,
};

// A finite group given by its Cayley table over 0..n-1, identity 0.
// Immutable once constructed.
class GroupTable {
 public:
  GroupTable() : GroupTable(trivial()) {}

  // Validates the Latin-square and identity invariants (and associativity
  // per `assoc`); throws FormatError on violation.
  static GroupTable from_table(std::size_t order, std::vector<Element> table,
                               AssociativityCheck assoc = AssociativityCheck::kPolicy);

  static GroupTable trivial();

  std::size_t order() const noexcept { return order_; }

  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element conj(Element x, Element h) const noexcept { return mul(mul(x, h), inverse_[x]); }
  Element pow(Element a, std::uint64_t k) const noexcept;

  std::uint32_t element_order(Element a) const noexcept { return element_orders_[a]; }
  std::span<Element const> element_orders() const noexcept { return element_orders_; }
  std::span<Element const> row(Element a) const noexcept {
    return {table_.data() + a * order_, order_};
  }
  std::span<Element const> table() const noexcept { return table_; }

  // A small generating set, found greedily in index order.
  std::span<Element const> generators() const noexcept { return generators_; }

  bool is_abelian() const noexcept { return abelian_; }

  // Hash of the full table; equal tables have equal fingerprints.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  friend bool operator==(GroupTable const& a, GroupTable const& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  GroupTable(std::size_t order, std::vector<Element> table);

  std::size_t order_ = 1;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<Element> element_orders_;
  std::vector<Element> generators_;
  bool abelian_ = true;
  std::uint64_t fingerprint_ = 0;
};

// Checks every GroupTable invariant; returns a description of the first
// violation.
std::optional<std::string> check_group_axioms(std::size_t order, std::span<Element const> table,
                                              AssociativityCheck assoc);

// A subgroup as a membership mask over its parent group.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(Bitmask members) : members_(std::move(members)), order_(members_.count()) {}

  static Subgroup trivial(std::size_t parent_order);
  static Subgroup whole(std::size_t parent_order);

  std::size_t parent_order() const noexcept { return members_.size(); }
  std::size_t order() const noexcept { return order_; }
  bool contains(Element e) const noexcept { return members_.test(e); }
  Bitmask const& members() const noexcept { return members_; }
  std::vector<Element> elements() const;

  bool is_subgroup_of(Subgroup const& other) const noexcept {
    return members_.is_subset_of(other.members_);
  }

  // Membership mask bytes in increasing element order.
  std::string canonical_key() const { return members_.bytes(); }
  std::string hex() const { return members_.hex(); }

  friend bool operator==(Subgroup const& a, Subgroup const& b) { return a.members_ == b.members_; }

  // Orders by (order, canonical key).
  friend bool operator<(Subgroup const& a, Subgroup const& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.members_.compare_bytes(b.members_) < 0;
  }

 private:
  Bitmask members_;
  std::size_t order_ = 0;
};

Subgroup intersection(Subgroup const& a, Subgroup const& b);

// Chain <x1> <= <x1,x2> <= ... for a sequence of elements.
struct GeneratingSequence {
  std::vector<Element> elements;
  std::vector<Subgroup> chain;

  bool strictly_ascending() const;
};

GeneratingSequence make_generating_sequence(GroupTable const& g, std::span<Element const> elements);

// Smallest subgroup containing `seed` (breadth-first products).
Subgroup closure(GroupTable const& g, std::span<Element const> seed);
Subgroup closure(GroupTable const& g, std::initializer_list<Element> seed);

// <h, extra> where h is already a subgroup.
Subgroup join(GroupTable const& g, Subgroup const& h, std::span<Element const> extra);

struct NormalityResult {
  bool normal = true;
  // On failure: x, h with x h x^-1 outside the subgroup.
  std::optional<std::pair<Element, Element>> witness;
};

NormalityResult is_normal(GroupTable const& g, Subgroup const& h);

Subgroup derived_subgroup(GroupTable const& g);

struct Quotient {
  GroupTable group;
  std::vector<Element> projection;  // element -> coset index
};

// Cosets are numbered by their smallest element, so the identity coset is 0.
// Throws NotNormalError with a witness when `n` is not normal.
Quotient quotient(GroupTable const& g, Subgroup const& n);

struct Embedded {
  GroupTable group;
  std::vector<Element> embedding;  // local index -> parent element
};

// The subgroup `h` as a group in its own right, elements in increasing
// parent order.
Embedded subgroup_as_group(GroupTable const& g, Subgroup const& h);

GroupTable direct_product(GroupTable const& a, GroupTable const& b, Limits const& limits = {});

// Permutations in one-line notation, 0-based: p[i] is the image of i.
using Permutation = std::vector<std::uint32_t>;

// Enumerates <generators> breadth-first. Products compose left to right:
// (a*b)(i) = b(a(i)).
GroupTable from_permutations(std::size_t degree, std::span<Permutation const> generators,
                             Limits const& limits = {},
                             AssociativityCheck assoc = AssociativityCheck::kPolicy);

struct PermutationGroup {
  GroupTable group;
  std::vector<Permutation> elements;  // element index -> permutation
};

PermutationGroup enumerate_permutations(std::size_t degree, std::span<Permutation const> generators,
                                        Limits const& limits = {},
                                        AssociativityCheck assoc = AssociativityCheck::kPolicy);

}  // namespace unigen

#endif  // UNIGEN_GROUP_HPP
