#pragma once

#include <cstdint>
#include <vector>

namespace elusive {

// F_{p^k} with elements encoded as integers in [0, p^k): the encoding of a
// polynomial sum a_i x^i (0 <= a_i < p) is sum a_i p^i.  The reduction
// modulus is the lexicographically least monic irreducible of degree k, so
// the construction is deterministic and stable across runs.
struct Field {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;  // coefficients low..high, size k+1, monic

  // lookup tables, present when q <= 256
  bool tables = false;
  std::vector<std::uint16_t> add_tab;  // q*q entries
  std::vector<std::uint16_t> mul_tab;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  // embedding of the prime subfield
  std::uint64_t scalar(std::uint64_t residue) const { return residue % p; }

  std::uint64_t frobenius(std::uint64_t a) const { return pow(a, p); }
};

Field make_field(std::uint32_t p, std::uint32_t k);

// least element of multiplicative order m; requires m | q - 1
std::uint64_t element_of_order(const Field& f, std::uint64_t m);

// multiplicative order of a != 0
std::uint64_t field_element_order(const Field& f, std::uint64_t a);

}  // namespace elusive
