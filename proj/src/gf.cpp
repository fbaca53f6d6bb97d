#include "elusive/gf.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "elusive/numth.hpp"

namespace elusive {

namespace {

using Poly = std::vector<std::uint32_t>;  // coeffs low..high, may carry top zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (std::uint32_t)((c[i + j] + (std::uint64_t)a[i] * b[j]) % p);
  }
  return c;
}

// a mod m, m monic
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  int dm = deg(m);
  assert(dm >= 0 && m[dm] == 1);
  for (int da = deg(a); da >= dm; da = deg(a)) {
    std::uint32_t lead = a[da];
    if (lead) {
      for (int j = 0; j <= dm; ++j) {
        std::uint64_t sub = (std::uint64_t)lead * m[j] % p;
        a[da - dm + j] = (std::uint32_t)((a[da - dm + j] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

Poly decode(std::uint64_t v, std::uint32_t p) {
  Poly a;
  while (v) {
    a.push_back((std::uint32_t)(v % p));
    v /= p;
  }
  return a;
}

std::uint64_t encode(const Poly& a, std::uint32_t p) {
  std::uint64_t v = 0;
  for (int i = (int)a.size() - 1; i >= 0; --i) v = v * p + a[i];
  return v;
}

bool divides(const Poly& d, const Poly& a, std::uint32_t p) {
  return deg(poly_rem(a, d, p)) < 0;
}

// trial division by every monic polynomial of degree 1..k/2
bool irreducible(const Poly& f, std::uint32_t p) {
  int k = deg(f);
  for (int e = 1; 2 * e <= k; ++e) {
    std::uint64_t count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly d = decode(low, p);
      d.resize(e + 1, 0);
      d[e] = 1;
      if (divides(d, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
  if (tables) return add_tab[a * q + b];
  std::uint64_t r = 0, pw = 1;
  while (a || b) {
    std::uint64_t da = a % p, db = b % p;
    r += (da + db) % p * pw;
    pw *= p;
    a /= p;
    b /= p;
  }
  return r;
}

std::uint64_t Field::neg(std::uint64_t a) const {
  std::uint64_t r = 0, pw = 1;
  while (a) {
    std::uint64_t da = a % p;
    r += (da ? p - da : 0) * pw;
    pw *= p;
    a /= p;
  }
  return r;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  if (tables) return mul_tab[a * q + b];
  Poly c = poly_mul(decode(a, p), decode(b, p), p);
  c = poly_rem(std::move(c), modulus, p);
  return encode(c, p);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("gf: inverse of zero");
  return pow(a, q - 2);
}

Field make_field(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw std::invalid_argument("gf: characteristic must be prime");
  if (k == 0 || k > 20) throw std::invalid_argument("gf: unsupported extension degree");
  Field f;
  f.p = p;
  f.k = k;
  f.q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (f.q > (std::uint64_t)1 << 40) throw std::invalid_argument("gf: field too large");
    f.q *= p;
  }
  if (k == 1) {
    f.modulus = {0, 1};  // placeholder x - 0 never used: k=1 arithmetic is mod p
  } else {
    // scan constants-first integer encodings so the chosen modulus is the
    // lexicographically least monic irreducible of degree k
    bool found = false;
    std::uint64_t span = f.q;  // p^k choices for the low coefficients
    for (std::uint64_t low = 0; low < span && !found; ++low) {
      Poly cand = decode(low, p);
      cand.resize(k + 1, 0);
      cand[k] = 1;
      if (irreducible(cand, p)) {
        f.modulus = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("gf: no irreducible found");
  }
  if (f.q <= 256) {
    f.add_tab.resize(f.q * f.q);
    f.mul_tab.resize(f.q * f.q);
    for (std::uint64_t a = 0; a < f.q; ++a)
      for (std::uint64_t b = 0; b < f.q; ++b) {
        f.add_tab[a * f.q + b] = (std::uint16_t)f.add(a, b);
        f.mul_tab[a * f.q + b] = (std::uint16_t)f.mul(a, b);
      }
    f.tables = true;
  }
  return f;
}

std::uint64_t field_element_order(const Field& f, std::uint64_t a) {
  if (a == 0) throw std::domain_error("gf: order of zero");
  std::uint64_t ord = f.q - 1;
  for (auto [r, e] : factorize(f.q - 1)) {
    (void)e;
    while (ord % r == 0 && f.pow(a, ord / r) == 1) ord /= r;
  }
  return ord;
}

std::uint64_t element_of_order(const Field& f, std::uint64_t m) {
  if (m == 0 || (f.q - 1) % m != 0) throw std::invalid_argument("gf: order does not divide q-1");
  if (m == 1) return 1;
  for (std::uint64_t a = 2; a < f.q; ++a) {
    if (f.pow(a, m) != 1) continue;
    if (field_element_order(f, a) == m) return a;
  }
  throw std::logic_error("gf: no element of requested order");
}

}  // namespace elusive
