// Brute-force reference computations used by the tests. Nothing here calls
// the library's closure, lattice or structure code; only GroupTable
// arithmetic (mul, inv) is shared.
#ifndef UNIGEN_TESTS_ORACLES_HPP
#define UNIGEN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "unigen/group.hpp"

namespace oracle {

using unigen::Element;
using unigen::GroupTable;
using Set = std::vector<bool>;

inline std::size_t count(Set const& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

inline bool subset(Set const& a, Set const& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// Naive closure: repeat "multiply everything by everything" until stable.
inline Set generated(GroupTable const& g, std::vector<Element> const& seed) {
  Set s(g.order(), false);
  s[0] = true;
  for (Element x : seed) s[x] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element a = 0; a < g.order(); ++a) {
      if (!s[a]) continue;
      for (Element b = 0; b < g.order(); ++b) {
        if (s[b] && !s[g.mul(a, b)]) {
          s[g.mul(a, b)] = true;
          grew = true;
        }
      }
    }
  }
  return s;
}

// Every subset closed under multiplication, found by deciding element by
// element and forcing products of chosen elements.
inline std::vector<Set> all_subgroups(GroupTable const& g) {
  std::size_t const n = g.order();
  std::vector<Set> out;
  std::function<void(Element, Set, Set)> rec = [&](Element i, Set in, Set out_set) {
    while (i < n && (in[i] || out_set[i])) ++i;
    if (i == n) {
      out.push_back(in);
      return;
    }
    {
      Set in2 = in;
      bool ok = true;
      std::vector<Element> todo{i};
      while (!todo.empty() && ok) {
        Element x = todo.back();
        todo.pop_back();
        if (in2[x]) continue;
        if (out_set[x]) {
          ok = false;
          break;
        }
        in2[x] = true;
        for (Element y = 0; y < n && ok; ++y) {
          if (!in2[y]) continue;
          for (Element z : {g.mul(x, y), g.mul(y, x)}) {
            if (out_set[z]) ok = false;
            else if (!in2[z]) todo.push_back(z);
          }
        }
      }
      if (ok) rec(i + 1, in2, out_set);
    }
    Set out2 = out_set;
    out2[i] = true;
    rec(i + 1, in, out2);
  };
  Set in(n, false), ex(n, false);
  in[0] = true;
  rec(1, in, ex);
  return out;
}

// Covering pairs (h, k): h < k with nothing strictly between.
inline std::set<std::pair<std::size_t, std::size_t>> covers(std::vector<Set> const& subs) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t h = 0; h < subs.size(); ++h) {
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (h == k || !subset(subs[h], subs[k])) continue;
      bool between = false;
      for (std::size_t l = 0; l < subs.size() && !between; ++l) {
        if (l == h || l == k) continue;
        between = subset(subs[h], subs[l]) && subset(subs[l], subs[k]);
      }
      if (!between) out.insert({h, k});
    }
  }
  return out;
}

struct Chains {
  int longest = 0;
  int shortest = 0;
};

// Longest and shortest unrefinable chains from the trivial subgroup to G.
inline Chains chain_lengths(std::vector<Set> const& subs) {
  auto cov = covers(subs);
  std::size_t bottom = 0, top = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (count(subs[i]) == 1) bottom = i;
    if (count(subs[i]) == subs[i].size()) top = i;
  }
  std::map<std::size_t, Chains> memo;
  std::function<Chains(std::size_t)> go = [&](std::size_t h) -> Chains {
    if (h == top) return {0, 0};
    if (auto it = memo.find(h); it != memo.end()) return it->second;
    Chains best{-1, 1 << 20};
    for (auto const& [a, b] : cov) {
      if (a != h) continue;
      Chains c = go(b);
      best.longest = std::max(best.longest, c.longest + 1);
      best.shortest = std::min(best.shortest, c.shortest + 1);
    }
    return memo[h] = best;
  };
  return go(bottom);
}

inline bool is_normal(GroupTable const& g, Set const& h) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (h[y] && !h[g.mul(g.mul(x, y), g.inv(x))]) return false;
  return true;
}

inline Element commutator(GroupTable const& g, Element a, Element b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

// [A, B] for subsets A, B (both containing the identity).
inline Set commutator_subgroup(GroupTable const& g, Set const& a, Set const& b) {
  std::vector<Element> seed;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (a[x] && b[y]) seed.push_back(commutator(g, x, y));
  return generated(g, seed);
}

inline Set whole(GroupTable const& g) { return Set(g.order(), true); }

// Nilpotent iff the lower central series of H reaches 1.
inline bool is_nilpotent(GroupTable const& g, Set const& h) {
  Set cur = h;
  for (std::size_t guard = 0; guard <= g.order(); ++guard) {
    if (count(cur) == 1) return true;
    Set next = commutator_subgroup(g, h, cur);
    if (next == cur) return false;
    cur = next;
  }
  return false;
}

// Largest normal nilpotent subgroup: the product of all of them.
inline Set fitting(GroupTable const& g, std::vector<Set> const& subs) {
  std::vector<Element> seed;
  for (auto const& s : subs) {
    if (is_normal(g, s) && is_nilpotent(g, s)) {
      for (Element x = 0; x < g.order(); ++x)
        if (s[x]) seed.push_back(x);
    }
  }
  return generated(g, seed);
}

// Intersection of the maximal subgroups.
inline Set frattini(std::vector<Set> const& subs) {
  auto cov = covers(subs);
  std::size_t n = subs.front().size();
  std::size_t top = 0;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (count(subs[i]) == n) top = i;
  Set phi(n, true);
  for (auto const& [h, k] : cov) {
    if (k != top) continue;
    for (std::size_t x = 0; x < n; ++x) phi[x] = phi[x] && subs[h][x];
  }
  return phi;
}

// Smallest d with some d-tuple generating G, by plain tuple enumeration.
inline int rank(GroupTable const& g) {
  if (g.order() == 1) return 0;
  for (int d = 1;; ++d) {
    std::vector<Element> t(d, 0);
    while (true) {
      if (count(generated(g, t)) == g.order()) return d;
      int i = 0;
      while (i < d && ++t[i] == g.order()) t[i++] = 0;
      if (i == d) break;
    }
  }
}

// Largest irredundant generating set, by enumerating subsets of G of
// increasing size. Only for very small groups.
inline int max_irredundant(GroupTable const& g) {
  std::size_t const n = g.order();
  int best = 0;
  std::vector<Element> pick;
  std::function<void(Element)> rec = [&](Element from) {
    if (!pick.empty() && count(generated(g, pick)) == n) {
      bool irredundant = true;
      for (std::size_t i = 0; i < pick.size() && irredundant; ++i) {
        std::vector<Element> rest;
        for (std::size_t j = 0; j < pick.size(); ++j)
          if (j != i) rest.push_back(pick[j]);
        irredundant = count(generated(g, rest)) != n;
      }
      if (irredundant) best = std::max(best, static_cast<int>(pick.size()));
      return;
    }
    for (Element x = from; x < n; ++x) {
      pick.push_back(x);
      // prefixes must themselves be irredundant in what they generate
      bool ok = true;
      Set full = generated(g, pick);
      for (std::size_t i = 0; i < pick.size() && ok; ++i) {
        std::vector<Element> rest;
        for (std::size_t j = 0; j < pick.size(); ++j)
          if (j != i) rest.push_back(pick[j]);
        ok = generated(g, rest) != full;
      }
      if (ok) rec(x + 1);
      pick.pop_back();
    }
  };
  rec(1);
  return best;
}

}  // namespace oracle

#endif  // UNIGEN_TESTS_ORACLES_HPP
