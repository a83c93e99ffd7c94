#ifndef UNIGEN_ARITH_HPP
#define UNIGEN_ARITH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace unigen {

bool is_prime(std::uint64_t n) noexcept;

// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Number of prime factors counted with multiplicity.
unsigned big_omega(std::uint64_t n);

// Multiplicative order of a modulo m, or nullopt if gcd(a, m) != 1.
std::optional<std::uint64_t> multiplicative_order(std::uint64_t a, std::uint64_t m);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept;

// a * b, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b,
                                         std::uint64_t limit = UINT64_MAX) noexcept;

}  // namespace unigen

#endif  // UNIGEN_ARITH_HPP
