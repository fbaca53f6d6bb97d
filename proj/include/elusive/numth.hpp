#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace elusive {

// modular arithmetic on 64-bit values, intermediate products widened to 128 bits
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// deterministic for all 64-bit inputs (fixed witness set)
bool is_prime(std::uint64_t n);

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Legendre symbol (a/p) for odd prime p; returns -1, 0 or +1
int legendre(std::int64_t a, std::uint64_t p);

// multiplicative order of q modulo r, for r prime not dividing q
unsigned phi_rq(std::uint64_t r, std::uint64_t q);

// exponent of the largest power of r dividing n (n > 0)
unsigned valuation(std::uint64_t n, std::uint64_t r);

struct Partition {
  std::vector<unsigned> parts;  // weakly decreasing, all >= 1

  unsigned sum() const;
  unsigned parts_gcd() const;
  bool operator==(const Partition&) const = default;
};

// all partitions of n with every part <= bound, in lexicographically
// decreasing order ([n] first when bound >= n, [1,1,...,1] last)
std::vector<Partition> p_bounded_partitions(unsigned n, unsigned bound);

}  // namespace elusive
