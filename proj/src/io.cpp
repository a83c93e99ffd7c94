#include "unigen/io.hpp"

#include <fstream>
#include <sstream>

#include "unigen/errors.hpp"

namespace unigen {

using nlohmann::json;

namespace {

std::size_t as_index(json const& v, std::string const& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(where + ": expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

GroupTable load_table(json const& doc, AssociativityCheck assoc, Limits const& limits) {
  if (!doc.contains("order")) throw FormatError("table group: missing \"order\"");
  std::size_t const n = as_index(doc["order"], "order");
  if (n == 0) throw FormatError("order: must be positive");
  if (n > limits.order_cap) {
    throw CapExceeded("group order " + std::to_string(n) + " exceeds the order cap " +
                          std::to_string(limits.order_cap),
                      limits.order_cap, n);
  }
  json const& rows = doc.value("table", json());
  if (!rows.is_array() || rows.size() != n) {
    throw FormatError("table: expected " + std::to_string(n) + " rows");
  }
  std::vector<Element> raw(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    json const& row = rows[a];
    if (!row.is_array() || row.size() != n) {
      throw FormatError("table[" + std::to_string(a) + "]: expected " + std::to_string(n) +
                        " entries");
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t v = as_index(row[b], "table[" + std::to_string(a) + "][" + std::to_string(b) + "]");
      if (v >= n) {
        throw FormatError("table[" + std::to_string(a) + "][" + std::to_string(b) +
                          "]: entry out of range");
      }
      raw[a * n + b] = static_cast<Element>(v);
    }
  }

  // Locate the identity and swap it with index 0.
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = raw[c * n + a] == a && raw[a * n + c] == a;
    if (ok) e = c;
  }
  if (e == n) throw FormatError("table: no identity element");
  if (e != 0) {
    auto relabel = [&](std::size_t x) -> std::size_t { return x == e ? 0 : x == 0 ? e : x; };
    std::vector<Element> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        t[relabel(a) * n + relabel(b)] = static_cast<Element>(relabel(raw[a * n + b]));
    raw = std::move(t);
  }
  return GroupTable::from_table(n, std::move(raw), assoc);
}

GroupTable load_perm(json const& doc, AssociativityCheck assoc, Limits const& limits) {
  if (!doc.contains("degree")) throw FormatError("perm group: missing \"degree\"");
  std::size_t const degree = as_index(doc["degree"], "degree");
  json const& gens = doc.value("generators", json::array());
  if (!gens.is_array()) throw FormatError("generators: expected an array");
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    json const& p = gens[i];
    std::string where = "generators[" + std::to_string(i) + "]";
    if (!p.is_array()) throw FormatError(where + ": expected an image list");
    Permutation perm;
    for (std::size_t j = 0; j < p.size(); ++j) {
      perm.push_back(static_cast<std::uint32_t>(as_index(p[j], where + "[" + std::to_string(j) + "]")));
    }
    perms.push_back(std::move(perm));
  }
  return from_permutations(degree, perms, limits, assoc);
}

}  // namespace

GroupTable load_group_json(std::string_view text, Limits const& limits, AssociativityCheck assoc) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    throw FormatError("invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    throw FormatError("group file: expected an object with a string \"kind\"");
  }
  std::string const kind = doc["kind"].get<std::string>();
  if (kind == "table") return load_table(doc, assoc, limits);
  if (kind == "perm") return load_perm(doc, assoc, limits);
  throw FormatError("group file: unknown kind \"" + kind + "\"");
}

GroupTable load_group_file(std::filesystem::path const& path, Limits const& limits,
                           AssociativityCheck assoc) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_group_json(buf.str(), limits, assoc);
  } catch (FormatError const& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

json group_to_json(GroupTable const& g) {
  json rows = json::array();
  for (Element a = 0; a < g.order(); ++a) {
    auto r = g.row(a);
    rows.push_back(std::vector<Element>(r.begin(), r.end()));
  }
  return json{{"kind", "table"}, {"order", g.order()}, {"table", std::move(rows)}};
}

json export_lattice(SubgroupLattice const& lat) {
  json subs = json::array();
  json orders = json::array();
  for (auto const& s : lat.subgroups()) {
    subs.push_back(s.hex());
    orders.push_back(s.order());
  }
  json edges = json::array();
  for (auto const& [h, k] : lat.maximal_edges()) edges.push_back({h, k});
  return json{{"order", lat.parent_order()},
              {"subgroups", std::move(subs)},
              {"subgroup_orders", std::move(orders)},
              {"edges", std::move(edges)}};
}

}  // namespace unigen
