#ifndef UNIGEN_CLASSIFIER_HPP
#define UNIGEN_CLASSIFIER_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "unigen/group.hpp"
#include "unigen/lattice.hpp"
#include "unigen/structure.hpp"

namespace unigen {

// (C_p)^d. The trivial group is reported with p = 0, d = 0.
struct ElementaryAbelian {
  std::uint64_t p = 0;
  unsigned d = 0;
};

// (C_p)^k semidirect C_q, C_q acting on (C_p)^k as the scalar lambda.
struct ScalarSemidirect {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
  std::uint64_t lambda = 0;
};

struct NotUniformlyGenerated {
  std::string reason;
};

struct ClassificationVerdict {
  std::variant<ElementaryAbelian, ScalarSemidirect, NotUniformlyGenerated> verdict;
  bool behavioral_agreement = true;

  bool positive() const noexcept { return !std::holds_alternative<NotUniformlyGenerated>(verdict); }
  // Predicted d(G) for a positive verdict, -1 otherwise.
  int predicted_rank() const noexcept;
};

std::string to_string(ClassificationVerdict const& v);

// Structural recognizer: elementary abelian, or |G| = p^k q with Fit(G)
// elementary abelian of order p^k, |G/Fit(G)| = q, and every element of
// order q acting on Fit(G) as one scalar lambda != 1.
ClassificationVerdict classify(GroupTable const& g, SubgroupLattice const& lat,
                               StructureReport const& structure);

// Same, enumerating the lattice only when the group is not elementary
// abelian.
ClassificationVerdict classify(GroupTable const& g, Limits const& limits = {});

struct Reconciliation {
  ClassificationVerdict verdict;
  bool behavioral = false;
  bool agree = false;
  // On disagreement: a chain stopping short, or the decomposition found.
  std::string witness;
};

Reconciliation reconcile(GroupTable const& g, SubgroupLattice const& lat,
                         StructureReport const& structure);
Reconciliation reconcile(GroupTable const& g, SubgroupLattice const& lat);

}  // namespace unigen

#endif  // UNIGEN_CLASSIFIER_HPP
