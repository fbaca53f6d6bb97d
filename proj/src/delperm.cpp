#include "elusive/delperm.hpp"

#include <algorithm>
#include <stdexcept>

namespace elusive {

namespace {

void check_dp(std::uint32_t d, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("deleted module: p must be prime");
  if (d < 3) throw std::invalid_argument("deleted module: d must be at least 3");
}

int form_eps_of(const GroupSpec& s) {
  if (s.family == Family::POmegaPlus) return +1;
  if (s.family == Family::POmegaMinus) return -1;
  return 0;
}

}  // namespace

DeletedModule build_deleted_module(std::uint32_t d, std::uint64_t p) {
  check_dp(d, p);
  DeletedModule mod;
  mod.d = d;
  mod.p = p;
  mod.p_divides_d = (d % p == 0);
  mod.n = d - 1 - (mod.p_divides_d ? 1 : 0);
  mod.symplectic = (p == 2 && d % 4 == 2);
  std::uint32_t n = mod.n;
  mod.gram = Mat::Zero(n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    mod.gram(i, i) = static_cast<std::int64_t>(2 % p);
    if (i + 1 < n) {
      mod.gram(i, i + 1) = static_cast<std::int64_t>(p - 1);
      mod.gram(i + 1, i) = static_cast<std::int64_t>(p - 1);
    }
  }
  if (p == 2) mod.q_diag.assign(n, 1);
  return mod;
}

FormType epsilon_type(std::uint32_t d, std::uint64_t p) {
  check_dp(d, p);
  if (p == 2) {
    if (d % 4 == 2) return FormType::Symplectic;
    if (d % 2 == 1) {
      std::uint32_t m8 = d % 8;
      return (m8 == 1 || m8 == 7) ? FormType::Plus : FormType::Minus;
    }
    return (d % 8 == 0) ? FormType::Plus : FormType::Minus;
  }
  std::uint32_t n = d - 1 - (d % p == 0 ? 1 : 0);
  if (n % 2 == 1) return FormType::Odd;
  // the Gram determinant of the difference basis is n + 1
  int lhs = legendre(static_cast<std::int64_t>((n + 1) % p), p);
  int rhs = (((n / 2) * ((p - 1) / 2)) % 2 == 0) ? +1 : -1;
  return lhs == rhs ? FormType::Plus : FormType::Minus;
}

GroupSpec socle_of_module(std::uint32_t d, std::uint64_t p) {
  check_dp(d, p);
  std::uint32_t n = d - 1 - (d % p == 0 ? 1 : 0);
  FormType t = epsilon_type(d, p);
  switch (t) {
    case FormType::Symplectic:
      return make_spec(Family::PSp, n, p, 1);
    case FormType::Odd:
      return make_spec(Family::OmegaOdd, n, p, 1);
    case FormType::Plus:
      return make_spec(Family::POmegaPlus, n, p, 1);
    case FormType::Minus:
      return make_spec(Family::POmegaMinus, n, p, 1);
    default:
      throw std::logic_error("socle_of_module: degenerate form");
  }
}

StabStructure h0_structure(std::uint32_t d, std::uint64_t p) {
  check_dp(d, p);
  if (p == 2) return (d % 4 == 2) ? StabStructure::Symmetric : StabStructure::Alternating;
  std::uint32_t n = d - 1 - (d % p == 0 ? 1 : 0);
  if (n % 2 == 0) return StabStructure::Alternating;
  // a transposition enters the socle via its negative exactly when the
  // discriminant condition below holds
  std::int64_t a = static_cast<std::int64_t>(((n + 1) / 2) % p);
  return legendre(a, p) == 1 ? StabStructure::Symmetric : StabStructure::Alternating;
}

Partition jordan_of_cycle_shape(std::uint32_t d, std::uint64_t p, std::uint32_t h) {
  check_dp(d, p);
  if (h == 0 || static_cast<std::uint64_t>(h) * p > d)
    throw std::invalid_argument("jordan_of_cycle_shape: bad cycle count");
  std::uint64_t s = d - h * p;
  std::vector<unsigned> parts;
  auto add = [&](std::uint64_t part, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (part > 0) parts.push_back(static_cast<unsigned>(part));
  };
  if (s >= 1) {
    add(p, h);
    add(1, s - 1 - (d % p == 0 ? 1 : 0));
  } else if (h % p != 0) {
    add(p, h - 1);
    add(p - 2, 1);
  } else if (p == 2 && h == 2) {
    add(2, 1);
  } else {
    add(p, h - 2);
    add(p - 1, 2);
  }
  std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
  Partition out;
  out.parts = std::move(parts);
  std::uint32_t n = d - 1 - (d % p == 0 ? 1 : 0);
  if (out.sum() != n) throw std::logic_error("jordan_of_cycle_shape: dimension mismatch");
  return out;
}

std::pair<std::uint32_t, std::uint32_t> eigen_multiplicity(std::uint32_t d, std::uint64_t p,
                                                           std::uint64_t r, std::uint32_t h) {
  check_dp(d, p);
  if (!is_prime(r) || r == p) throw std::invalid_argument("eigen_multiplicity: bad r");
  if (h == 0 || static_cast<std::uint64_t>(h) * r > d)
    throw std::invalid_argument("eigen_multiplicity: bad cycle count");
  std::uint32_t n = d - 1 - (d % p == 0 ? 1 : 0);
  std::uint64_t moved = static_cast<std::uint64_t>(h) * (r - 1);
  if (moved > n) throw std::invalid_argument("eigen_multiplicity: shape exceeds the module");
  return {h, static_cast<std::uint32_t>(n - moved)};
}

FuseResult fuse_cycle_type(std::uint32_t d, std::uint64_t p, std::uint64_t r, std::uint32_t h) {
  check_dp(d, p);
  GroupSpec s = socle_of_module(d, p);
  std::uint32_t n = s.n;
  FuseResult out;
  ClassLabel& lab = out.label;
  if (r == p) {
    Partition jor = jordan_of_cycle_shape(d, p, h);
    lab.kind = LabelKind::Unipotent;
    lab.jordan = jor;
    if (p == 2) {
      std::uint32_t ell = 0;
      for (unsigned part : jor.parts) ell += (part == 2);
      lab.ell = ell;
      // permuted coordinate differences give nonzero form values, never the
      // trivial-valued type
      lab.decor = (ell % 2 == 1) ? Decor2::B : Decor2::C;
      if (s.orthogonal() && ell % 2 == 1)
        throw std::invalid_argument("fuse: image lies outside the socle");
      out.decoration_resolved = true;
    } else {
      // form decorations of the orthogonal Jordan shape are not computed
      out.decoration_resolved = false;
    }
    return out;
  }
  if (r == 2) {
    // p odd; the module carries a symmetric form
    if (h % 2 == 1) {
      bool n_odd = (n % 2 == 1);
      if (!n_odd || h0_structure(d, p) != StabStructure::Symmetric)
        throw std::invalid_argument("fuse: image lies outside the socle");
      std::uint32_t w = n - h;
      // minus space of the negated image: discriminant (n+1) * 2^h, h odd
      int sgn = legendre(static_cast<std::int64_t>((n + 1) % p), p) * legendre(2, p);
      int par = ((w / 2) * ((p - 1) / 2)) % 2 == 0 ? +1 : -1;
      lab.kind = LabelKind::Involution;
      lab.minus_dim = w;
      lab.tau = sgn * par;
      return out;
    }
    // h even: always inside the socle
    int tau_minus = ((h / 2) * ((p - 1) / 2)) % 2 == 0 ? +1 : -1;  // disc is square
    lab.kind = LabelKind::Involution;
    if (n % 2 == 1) {
      lab.minus_dim = h;
      lab.tau = tau_minus;
      return out;
    }
    int eps = form_eps_of(s);
    int tau_plus = eps * tau_minus;
    if (2 * h <= n) {
      lab.minus_dim = h;
      lab.tau = tau_minus;
      lab.tau_perp = tau_plus;
    } else {
      lab.minus_dim = n - h;
      lab.tau = tau_plus;
      lab.tau_perp = tau_minus;
    }
    if (2 * lab.minus_dim == n && eps == -1 && lab.tau == -1)
      std::swap(lab.tau, lab.tau_perp);  // unordered pair, canonical (+,-)
    return out;
  }
  // odd r different from p
  auto [mult, e] = eigen_multiplicity(d, p, r, h);
  std::uint32_t c = c_value(s, r);
  if (c >= 2) {
    BlockSystem bs = block_system(s, r);
    lab.kind = LabelKind::Semisimple;
    lab.block_mult.assign(bs.s, mult);
    lab.fixed_dim = e;
    if (s.orthogonal() && e == 0) {
      int eps_block = (phi_rq(r, s.q()) % 2 == 0) ? -1 : +1;
      std::uint64_t tot = static_cast<std::uint64_t>(mult) * bs.s;
      int eps_lbl = (tot % 2 == 0) ? +1 : eps_block;
      if (eps_lbl != form_eps_of(s))
        throw std::logic_error("fuse: type bookkeeping contradiction");
      lab.splits = true;
    }
  } else {
    std::vector<std::uint32_t> m(r, mult);
    m[0] = e;
    lab.kind = LabelKind::SemisimpleSplit;
    std::vector<std::uint32_t> best = m;
    for (std::uint64_t k = 1; k < r; ++k) {
      std::vector<std::uint32_t> rot(r);
      for (std::uint64_t j = 0; j < r; ++j) rot[j] = m[(j + k) % r];
      if (rot > best) best = rot;
    }
    lab.eig_mult = best;
  }
  return out;
}

Mat permutation_matrix_on_module(std::uint32_t d, std::uint64_t p,
                                 const std::vector<std::uint32_t>& perm) {
  check_dp(d, p);
  if (perm.size() != d) throw std::invalid_argument("permutation length must equal d");
  {
    std::vector<char> seen(d, 0);
    for (std::uint32_t v : perm) {
      if (v >= d || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = 1;
    }
  }
  bool pd = (d % p == 0);
  std::uint32_t n = d - 1 - (pd ? 1 : 0);
  Mat out = Mat::Zero(n, n);
  std::int64_t ip = static_cast<std::int64_t>(p);
  for (std::uint32_t i = 0; i + 1 < d; ++i) {
    // image of e_i = v_i - v_{i+1} in difference coordinates
    std::vector<std::int64_t> coef(d - 1, 0);
    std::uint32_t a = perm[i], b = perm[i + 1];
    if (a < b)
      for (std::uint32_t k = a; k < b; ++k) coef[k] += 1;
    else
      for (std::uint32_t k = b; k < a; ++k) coef[k] -= 1;
    if (pd) {
      // fold the last coordinate through e_{d-2} = sum (k+1) e_k
      std::int64_t t = coef[d - 2];
      for (std::uint32_t k = 0; k + 1 < n + 1; ++k)
        coef[k] = (coef[k] + t * static_cast<std::int64_t>(k + 1)) % ip;
    }
    if (i < n)
      for (std::uint32_t k = 0; k < n; ++k) out(k, i) = ((coef[k] % ip) + ip) % ip;
  }
  return out;
}

}  // namespace elusive
