#include "unigen/spec.hpp"

#include <cctype>
#include <numeric>

#include "unigen/arith.hpp"
#include "unigen/errors.hpp"

namespace unigen {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::optional<std::uint64_t> factorial(unsigned n) {
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) {
    auto next = checked_mul(r, i);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

std::optional<std::uint64_t> ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

void flatten_into(GroupSpec const& spec, std::vector<GroupSpec>& out) {
  if (auto const* dp = std::get_if<DirectProduct>(&spec.node)) {
    for (auto const& f : dp->factors) flatten_into(f, out);
  } else {
    out.push_back(spec);
  }
}

}  // namespace

std::optional<std::uint64_t> GroupSpec::order() const {
  return std::visit(
      overloaded{
          [](Cyclic const& c) -> std::optional<std::uint64_t> { return c.n; },
          [](Elementary const& e) { return ipow(e.p, e.d); },
          [](Dihedral const& d) -> std::optional<std::uint64_t> { return 2ull * d.n; },
          [](Symmetric const& s) { return factorial(s.n); },
          [](Alternating const& a) -> std::optional<std::uint64_t> {
            if (a.n <= 2) return 1;
            auto f = factorial(a.n);
            if (!f) return std::nullopt;
            return *f / 2;
          },
          [](ScalarProduct const& s) -> std::optional<std::uint64_t> {
            auto pk = ipow(s.p, s.k);
            if (!pk) return std::nullopt;
            return checked_mul(*pk, s.q);
          },
          [](DirectProduct const& dp) -> std::optional<std::uint64_t> {
            std::uint64_t r = 1;
            for (auto const& f : dp.factors) {
              auto o = f.order();
              if (!o) return std::nullopt;
              auto next = checked_mul(r, *o);
              if (!next) return std::nullopt;
              r = *next;
            }
            return r;
          },
      },
      node);
}

bool operator==(GroupSpec const& a, GroupSpec const& b) { return to_string(a) == to_string(b); }

std::string to_string(GroupSpec const& spec) {
  auto num = [](unsigned v) { return std::to_string(v); };
  return std::visit(
      overloaded{
          [&](Cyclic const& c) { return "C" + num(c.n); },
          [&](Elementary const& e) { return "E(" + num(e.p) + "," + num(e.d) + ")"; },
          [&](Dihedral const& d) { return "D" + num(d.n); },
          [&](Symmetric const& s) { return "S" + num(s.n); },
          [&](Alternating const& a) { return "A" + num(a.n); },
          [&](ScalarProduct const& s) {
            return "Scalar(" + num(s.p) + "," + num(s.k) + "," + num(s.q) + ")";
          },
          [&](DirectProduct const& dp) {
            std::vector<GroupSpec> flat;
            for (auto const& f : dp.factors) flatten_into(f, flat);
            std::string out;
            for (std::size_t i = 0; i < flat.size(); ++i) {
              if (i) out += " x ";
              out += to_string(flat[i]);
            }
            return out;
          },
      },
      spec.node);
}

namespace {

// Checks one non-product node. Returns the violated rule, if any.
std::optional<std::string> violation(GroupSpec const& spec) {
  return std::visit(
      overloaded{
          [](Cyclic const& c) -> std::optional<std::string> {
            if (c.n < 1) return "C n: n must be at least 1";
            return std::nullopt;
          },
          [](Elementary const& e) -> std::optional<std::string> {
            if (!is_prime(e.p)) return "E(p,d): p = " + std::to_string(e.p) + " is not prime";
            if (e.d < 1) return "E(p,d): d must be at least 1";
            return std::nullopt;
          },
          [](Dihedral const& d) -> std::optional<std::string> {
            if (d.n < 1) return "D n: n must be at least 1";
            return std::nullopt;
          },
          [](Symmetric const& s) -> std::optional<std::string> {
            if (s.n < 1) return "S n: n must be at least 1";
            return std::nullopt;
          },
          [](Alternating const& a) -> std::optional<std::string> {
            if (a.n < 1) return "A n: n must be at least 1";
            return std::nullopt;
          },
          [](ScalarProduct const& s) -> std::optional<std::string> {
            if (!is_prime(s.p)) return "Scalar(p,k,q): p = " + std::to_string(s.p) + " is not prime";
            if (!is_prime(s.q)) return "Scalar(p,k,q): q = " + std::to_string(s.q) + " is not prime";
            if (s.q == s.p) return "Scalar(p,k,q): q must differ from p";
            if ((s.p - 1) % s.q != 0) {
              return "Scalar(p,k,q): q = " + std::to_string(s.q) + " does not divide p - 1 = " +
                     std::to_string(s.p - 1);
            }
            if (s.k < 1) return "Scalar(p,k,q): k must be at least 1";
            return std::nullopt;
          },
          [](DirectProduct const& dp) -> std::optional<std::string> {
            if (dp.factors.empty()) return "direct product needs at least one factor";
            return std::nullopt;
          },
      },
      spec.node);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    std::vector<GroupSpec> terms;
    terms.push_back(term());
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != 'x') fail("expected 'x' or end of input");
      ++pos_;
      terms.push_back(term());
      skip_ws();
    }
    if (terms.size() == 1) return std::move(terms.front());
    return DirectProduct{std::move(terms)};
  }

 private:
  [[noreturn]] void fail(std::string const& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(std::string const& msg, std::size_t at) const {
    throw SpecError(msg + " at offset " + std::to_string(at), at);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool match_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  unsigned integer() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 1'000'000'000ull) fail_at("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return static_cast<unsigned>(v);
  }

  GroupSpec term() {
    skip_ws();
    std::size_t const start = pos_;
    if (pos_ >= text_.size()) fail("expected a group term");
    GroupSpec spec;
    if (match_word("Scalar")) {
      expect('(');
      unsigned p = integer();
      expect(',');
      unsigned k = integer();
      expect(',');
      unsigned q = integer();
      expect(')');
      spec = ScalarProduct{p, k, q};
    } else {
      char c = text_[pos_++];
      switch (c) {
        case 'C':
          spec = Cyclic{integer()};
          break;
        case 'D':
          spec = Dihedral{integer()};
          break;
        case 'S':
          spec = Symmetric{integer()};
          break;
        case 'A':
          spec = Alternating{integer()};
          break;
        case 'E': {
          expect('(');
          unsigned p = integer();
          expect(',');
          unsigned d = integer();
          expect(')');
          spec = Elementary{p, d};
          break;
        }
        default:
          fail_at("unknown group constructor '" + std::string(1, c) + "'", start);
      }
    }
    if (auto v = violation(spec)) fail_at(*v, start);
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

void validate(GroupSpec const& spec) {
  if (auto v = violation(spec)) throw SpecError(*v);
  if (auto const* dp = std::get_if<DirectProduct>(&spec.node)) {
    for (auto const& f : dp->factors) validate(f);
  }
}

unsigned canonical_scalar(unsigned p, unsigned q) {
  for (unsigned l = 2; l < p; ++l) {
    if (multiplicative_order(l, p) == q) return l;
  }
  throw SpecError("no scalar of multiplicative order " + std::to_string(q) + " modulo " +
                  std::to_string(p));
}

namespace {

GroupTable table_from(std::size_t n, auto&& mul) {
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>(mul(a, b));
  return GroupTable::from_table(n, std::move(t));
}

// Adds two vectors over Z_p packed as base-p integers with `k` digits, the
// second scaled by `scale`.
std::size_t add_scaled(std::size_t v, std::size_t w, std::size_t scale, unsigned p, unsigned k) {
  std::size_t out = 0;
  std::size_t place = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::size_t digit = (v % p + scale * (w % p)) % p;
    out += digit * place;
    place *= p;
    v /= p;
    w /= p;
  }
  return out;
}

Permutation cycle_perm(unsigned degree, std::initializer_list<unsigned> cycle) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::vector<unsigned> c(cycle);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

}  // namespace

GroupTable build_from_spec(GroupSpec const& spec, Limits const& limits, AssociativityCheck assoc) {
  validate(spec);
  auto order = spec.order();
  if (!order || *order > limits.order_cap) {
    throw CapExceeded("group " + to_string(spec) + " exceeds the order cap " +
                          std::to_string(limits.order_cap),
                      limits.order_cap, order.value_or(UINT64_MAX));
  }
  std::size_t const n = *order;

  auto finish = [&](GroupTable g) {
    if (assoc == AssociativityCheck::kFull) {
      if (auto err = check_group_axioms(g.order(), g.table(), assoc)) throw FormatError(*err);
    }
    return g;
  };

  return std::visit(
      overloaded{
          [&](Cyclic const&) { return finish(table_from(n, [&](auto a, auto b) { return (a + b) % n; })); },
          [&](Elementary const& e) {
            return finish(table_from(n, [&](auto a, auto b) { return add_scaled(a, b, 1, e.p, e.d); }));
          },
          [&](Dihedral const& d) {
            // index i + n*s stands for r^i s^s
            std::size_t const m = d.n;
            return finish(table_from(n, [&](std::size_t a, std::size_t b) {
              std::size_t i = a % m, s = a / m, j = b % m, t = b / m;
              std::size_t rot = s ? (i + m - j) % m : (i + j) % m;
              return rot + m * ((s + t) % 2);
            }));
          },
          [&](Symmetric const& s) {
            std::vector<Permutation> gens;
            if (s.n >= 2) gens.push_back(cycle_perm(s.n, {0, 1}));
            if (s.n >= 3) {
              Permutation c(s.n);
              for (unsigned i = 0; i < s.n; ++i) c[i] = (i + 1) % s.n;
              gens.push_back(c);
            }
            return from_permutations(s.n, gens, limits, assoc);
          },
          [&](Alternating const& a) {
            std::vector<Permutation> gens;
            for (unsigned i = 2; i < a.n; ++i) gens.push_back(cycle_perm(a.n, {0, 1, i}));
            return from_permutations(a.n, gens, limits, assoc);
          },
          [&](ScalarProduct const& sp) {
            // (v, j) -> v + p^k j; (v,j)(w,m) = (v + lambda^j w, j + m)
            unsigned const lambda = canonical_scalar(sp.p, sp.q);
            std::size_t const pk = n / sp.q;
            std::vector<std::size_t> scale(sp.q);
            for (unsigned j = 0; j < sp.q; ++j) scale[j] = pow_mod(lambda, j, sp.p);
            return finish(table_from(n, [&](std::size_t a, std::size_t b) {
              std::size_t v = a % pk, j = a / pk, w = b % pk, m = b / pk;
              return add_scaled(v, w, scale[j], sp.p, sp.k) + pk * ((j + m) % sp.q);
            }));
          },
          [&](DirectProduct const& dp) {
            GroupTable acc = GroupTable::trivial();
            for (auto const& f : dp.factors) acc = direct_product(acc, build_from_spec(f, limits, assoc), limits);
            return acc;
          },
      },
      spec.node);
}

}  // namespace unigen
