#ifndef UNIGEN_IO_HPP
#define UNIGEN_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "unigen/group.hpp"
#include "unigen/lattice.hpp"

namespace unigen {

// Group file, either
//   {"kind":"table","order":n,"table":[[...],...]}
//   {"kind":"perm","degree":k,"generators":[[images],...]}
// Entries are 0-based. The identity is moved to index 0 on load.
// Throws FormatError naming the offending field (or the JSON parse offset).
GroupTable load_group_json(std::string_view text, Limits const& limits = {},
                           AssociativityCheck assoc = AssociativityCheck::kPolicy);
GroupTable load_group_file(std::filesystem::path const& path, Limits const& limits = {},
                           AssociativityCheck assoc = AssociativityCheck::kPolicy);

nlohmann::json group_to_json(GroupTable const& g);

// {"order": n, "subgroups": [hex masks], "subgroup_orders": [...],
//  "edges": [[h, k], ...]} with (h, k) meaning h is maximal in k.
nlohmann::json export_lattice(SubgroupLattice const& lat);

}  // namespace unigen

#endif  // UNIGEN_IO_HPP
