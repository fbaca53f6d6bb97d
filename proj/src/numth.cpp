#include "elusive/numth.hpp"

#include <numeric>
#include <stdexcept>

namespace elusive {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t acc = 1;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // this witness set decides primality for every n < 2^64
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  if (n < 2) return out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("legendre: p must be an odd prime");
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  if (r == 0) return 0;
  std::uint64_t e = pow_mod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

unsigned phi_rq(std::uint64_t r, std::uint64_t q) {
  if (!is_prime(r)) throw std::invalid_argument("phi_rq: r must be prime");
  if (q % r == 0) throw std::invalid_argument("phi_rq: r divides q");
  std::uint64_t ord = r - 1;
  for (auto [p, e] : factorize(r - 1)) {
    (void)e;
    while (ord % p == 0 && pow_mod(q, ord / p, r) == 1) ord /= p;
  }
  return static_cast<unsigned>(ord);
}

unsigned valuation(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r < 2) throw std::invalid_argument("valuation: need n > 0, r > 1");
  unsigned v = 0;
  while (n % r == 0) {
    n /= r;
    ++v;
  }
  return v;
}

unsigned Partition::sum() const {
  unsigned s = 0;
  for (unsigned x : parts) s += x;
  return s;
}

unsigned Partition::parts_gcd() const {
  unsigned g = 0;
  for (unsigned x : parts) g = std::gcd(g, x);
  return g;
}

namespace {
void rec_partitions(unsigned n, unsigned bound, std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (unsigned k = std::min(n, bound); k >= 1; --k) {
    cur.push_back(k);
    rec_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> p_bounded_partitions(unsigned n, unsigned bound) {
  std::vector<Partition> out;
  if (bound == 0) {
    if (n == 0) out.push_back(Partition{});
    return out;
  }
  std::vector<unsigned> cur;
  rec_partitions(n, bound, cur, out);
  return out;
}

}  // namespace elusive
