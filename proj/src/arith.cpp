#include "unigen/arith.hpp"

namespace unigen {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

unsigned big_omega(std::uint64_t n) {
  unsigned total = 0;
  for (auto const& [p, e] : factorize(n)) total += e;
  return total;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::optional<std::uint64_t> multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) return std::nullopt;
  a %= m;
  std::uint64_t x = a;
  for (std::uint64_t k = 1; k <= m; ++k) {
    if (x == 1) return k;
    if (x == 0) return std::nullopt;
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * a) % m);
  }
  return std::nullopt;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b,
                                         std::uint64_t limit) noexcept {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > limit) return std::nullopt;
  return static_cast<std::uint64_t>(r);
}

}  // namespace unigen
