#include "elusive/groups.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "elusive/classes.hpp"
#include "elusive/numth.hpp"

namespace elusive {

const char* family_name(Family f) {
  switch (f) {
    case Family::PSL: return "PSL";
    case Family::PSU: return "PSU";
    case Family::PSp: return "PSp";
    case Family::POmegaPlus: return "POmega+";
    case Family::POmegaMinus: return "POmega-";
    case Family::OmegaOdd: return "Omega";
  }
  return "?";
}

std::uint64_t GroupSpec::q() const {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < f; ++i) v *= p;
  return v;
}

int GroupSpec::eps() const {
  if (family == Family::PSL) return 1;
  if (family == Family::PSU) return -1;
  return 0;
}

bool GroupSpec::orthogonal() const {
  return family == Family::POmegaPlus || family == Family::POmegaMinus ||
         family == Family::OmegaOdd;
}

std::string GroupSpec::to_string() const {
  std::ostringstream os;
  os << family_name(family) << n << "(" << q() << ")";
  if (family == Family::PSp && n == 4 && q() == 2) os << "'";
  return os.str();
}

GroupSpec make_spec(Family fam, std::uint32_t n, std::uint64_t p, std::uint32_t f) {
  if (!is_prime(p)) throw std::invalid_argument("make_spec: p must be prime");
  if (f == 0 || f > 40) throw std::invalid_argument("make_spec: bad field exponent");
  GroupSpec s{fam, n, p, f};
  std::uint64_t q = s.q();
  switch (fam) {
    case Family::PSL:
      if (n < 2) throw std::invalid_argument("make_spec: linear dimension must be >= 2");
      if (n == 2 && q <= 3) throw std::invalid_argument("make_spec: group is not simple");
      break;
    case Family::PSU:
      if (n < 3) throw std::invalid_argument("make_spec: unitary dimension must be >= 3");
      if (n == 3 && q == 2) throw std::invalid_argument("make_spec: group is not simple");
      break;
    case Family::PSp:
      if (n < 4 || n % 2) throw std::invalid_argument("make_spec: symplectic dimension must be even >= 4");
      break;
    case Family::OmegaOdd:
      if (n < 5 || n % 2 == 0) throw std::invalid_argument("make_spec: odd orthogonal dimension must be odd >= 5");
      if (p == 2) throw std::invalid_argument("make_spec: use the symplectic family in characteristic 2");
      break;
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      if (n < 6 || n % 2) throw std::invalid_argument("make_spec: even orthogonal dimension must be even >= 6");
      break;
  }
  return s;
}

bigint group_order(const GroupSpec& s) {
  const std::uint64_t q = s.q();
  bigint bq = q, ord = 1;
  auto qpow = [&](std::uint64_t e) {
    bigint r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= bq;
    return r;
  };
  switch (s.family) {
    case Family::PSL: {
      ord = qpow((std::uint64_t)s.n * (s.n - 1) / 2);
      for (std::uint32_t k = 2; k <= s.n; ++k) ord *= qpow(k) - 1;
      ord /= std::gcd((std::uint64_t)s.n, q - 1);
      break;
    }
    case Family::PSU: {
      ord = qpow((std::uint64_t)s.n * (s.n - 1) / 2);
      for (std::uint32_t k = 2; k <= s.n; ++k) ord *= qpow(k) - (k % 2 ? -1 : 1);
      ord /= std::gcd((std::uint64_t)s.n, q + 1);
      break;
    }
    case Family::PSp: {
      std::uint32_t m = s.n / 2;
      ord = qpow((std::uint64_t)m * m);
      for (std::uint32_t k = 1; k <= m; ++k) ord *= qpow(2 * k) - 1;
      ord /= std::gcd((std::uint64_t)2, q - 1);
      if (s.n == 4 && q == 2) ord /= 2;  // derived subgroup
      break;
    }
    case Family::OmegaOdd: {
      std::uint32_t m = (s.n - 1) / 2;
      ord = qpow((std::uint64_t)m * m);
      for (std::uint32_t k = 1; k <= m; ++k) ord *= qpow(2 * k) - 1;
      ord /= 2;  // q odd here
      break;
    }
    case Family::POmegaPlus:
    case Family::POmegaMinus: {
      std::uint32_t m = s.n / 2;
      int eps = s.family == Family::POmegaPlus ? 1 : -1;
      ord = qpow((std::uint64_t)m * (m - 1));
      ord *= qpow(m) - eps;
      for (std::uint32_t k = 1; k < m; ++k) ord *= qpow(2 * k) - 1;
      bigint g = boost::multiprecision::gcd(bigint(4), qpow(m) - eps);
      ord /= g;
      break;
    }
  }
  return ord;
}

bigint factorial(std::uint32_t d) {
  bigint r = 1;
  for (std::uint32_t i = 2; i <= d; ++i) r *= i;
  return r;
}

bigint alternating_order(std::uint32_t d) { return factorial(d) / 2; }

unsigned big_valuation(bigint v, std::uint64_t r) {
  if (v == 0) throw std::invalid_argument("big_valuation: zero");
  unsigned e = 0;
  while (v % r == 0) {
    v /= r;
    ++e;
  }
  return e;
}

unsigned r_valuation(const GroupSpec& s, std::uint64_t r) {
  return big_valuation(group_order(s), r);
}

std::uint32_t c_value(const GroupSpec& s, std::uint64_t r) {
  if (!is_prime(r) || r == 2) throw std::invalid_argument("c_value: r must be an odd prime");
  if (r == s.p) throw std::invalid_argument("c_value: r equals the characteristic");
  std::uint32_t i = phi_rq(r, s.q());
  std::uint32_t c;
  if (i % 2 == 1 && s.family != Family::PSL)
    c = 2 * i;
  else if (i % 4 == 2 && s.family == Family::PSU)
    c = i / 2;
  else
    c = i;
  return c;
}

KappaReport kappa_rules(const GroupSpec& s, std::uint64_t r) {
  std::uint32_t c = c_value(s, r);
  if (c > s.n) throw std::invalid_argument("kappa_rules: r does not divide the group order");
  KappaReport rep;
  std::uint64_t m = s.n / c;
  std::uint64_t s_blocks = (r - 1) / c;
  if (m == 1 || (s.family == Family::POmegaMinus && 2 * c == s.n)) {
    rep.exact = true;
    rep.value = rep.lower = rep.upper = 1;
    rep.upper_known = true;
    return rep;
  }
  if (c == 1) {
    // only loose bounds here; exact counts come from enumeration
    rep.lower = 1;
    if (r >= 5 && s.n == 3)
      rep.upper = r - 1, rep.upper_known = true;
    else if (r >= 5 && s.n == 4)
      rep.upper = (r * r - 3 * r + 6) / 2, rep.upper_known = true;
    return rep;
  }
  std::uint64_t delta = (s.orthogonal() && (std::uint64_t)s.n == m * c) ? 1 : 0;
  rep.lower = m - delta;
  if (rep.lower < 2) rep.lower = 2;  // count 1 is exactly the case above
  if (s.n / (r - 1) >= 1 && s.n / (r - 1) - 1 > rep.lower) rep.lower = s.n / (r - 1) - 1;
  if (m == 2 && !(2 * c == s.n && s.family == Family::POmegaPlus)) {
    rep.upper = s_blocks + 1;
    rep.upper_known = true;
  }
  if (r >= 5 && s.n == 6 && c == 2 &&
      (s.family == Family::PSL || s.family == Family::PSU)) {
    std::uint64_t b = (r * r + 15) / 8;
    if (!rep.upper_known || b < rep.upper) {
      rep.upper = b;
      rep.upper_known = true;
    }
  }
  return rep;
}

std::optional<std::uint64_t> kappa2_lowdim(const GroupSpec& s) {
  const std::uint64_t q = s.q();
  if (s.family == Family::PSp && s.n == 4 && q == 2) return 1;  // derived subgroup
  if (s.p == 2) return std::nullopt;                            // unipotent route
  int e = s.eps();
  if ((s.family == Family::PSL && s.n == 2)) return 1;
  if ((s.family == Family::PSL || s.family == Family::PSU) && s.n == 3) return 1;
  if ((s.family == Family::PSL || s.family == Family::PSU) && s.n == 4)
    return (q % 8 == (std::uint64_t)((8 + 5 * e) % 8)) ? 1 : 2;
  if ((s.family == Family::PSL || s.family == Family::PSU) && s.n == 5) return 2;
  if (s.family == Family::PSp && s.n == 4) return 2;
  return std::nullopt;
}

std::optional<std::uint64_t> kappa_p_exact(const GroupSpec& s) {
  if (s.family == Family::PSL && s.n == 2)
    return (s.p != 2 && s.f % 2 == 0) ? 2 : 1;
  return std::nullopt;
}

bool kappa_monotone_check(const GroupSpec& t1, const GroupSpec& t2, std::uint64_t r) {
  if (t2.n <= 2 * t1.n) throw std::invalid_argument("kappa_monotone_check: need dim(t2) > 2 dim(t1)");
  auto k1 = enumerate_subgroup_classes(t1, r);
  auto k2 = enumerate_subgroup_classes(t2, r);
  if (!k1.exact || !k2.exact)
    throw std::invalid_argument("kappa_monotone_check: counts not exact for these inputs");
  return k2.count > k1.count;
}

}  // namespace elusive
