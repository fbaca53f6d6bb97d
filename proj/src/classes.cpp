#include "elusive/classes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "elusive/numth.hpp"

namespace elusive {

namespace {

std::uint64_t primitive_root_mod(std::uint64_t r) {
  if (r == 2) return 1;
  auto fac = factorize(r - 1);
  for (std::uint64_t g = 2; g < r; ++g) {
    bool ok = true;
    for (auto& pe : fac)
      if (pow_mod(g, (r - 1) / pe.first, r) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

// form type of the even-dimensional orthogonal families
int form_eps(const GroupSpec& s) {
  if (s.family == Family::POmegaPlus) return +1;
  if (s.family == Family::POmegaMinus) return -1;
  return 0;
}

std::vector<std::uint32_t> max_rotation(const std::vector<std::uint32_t>& m) {
  std::vector<std::uint32_t> best = m;
  size_t r = m.size();
  std::vector<std::uint32_t> rot(r);
  for (size_t k = 1; k < r; ++k) {
    for (size_t j = 0; j < r; ++j) rot[j] = m[(j + k) % r];
    if (rot > best) best = rot;
  }
  return best;
}

// type of a 2*ell dimensional orthogonal space of square discriminant
int disc_square_tau(std::uint32_t ell, std::uint64_t q) {
  return (ell * ((q - 1) / 2)) % 2 == 0 ? +1 : -1;
}

}  // namespace

FrobeniusOrbitSystem root_orbits(std::uint64_t r, std::uint64_t q) {
  if (!is_prime(r)) throw std::invalid_argument("root_orbits: r must be prime");
  if (q % r == 0) throw std::invalid_argument("root_orbits: r divides q");
  FrobeniusOrbitSystem sys;
  sys.r = r;
  sys.q_mod_r = q % r;
  sys.orbit_of.assign(r, UINT32_MAX);
  for (std::uint64_t a = 1; a < r; ++a) {
    if (sys.orbit_of[a] != UINT32_MAX) continue;
    std::vector<std::uint32_t> orb;
    std::uint64_t x = a;
    do {
      orb.push_back(static_cast<std::uint32_t>(x));
      sys.orbit_of[x] = static_cast<std::uint32_t>(sys.orbits.size());
      x = mul_mod(x, sys.q_mod_r, r);
    } while (x != a);
    std::sort(orb.begin(), orb.end());
    sys.orbits.push_back(std::move(orb));
  }
  return sys;
}

BlockSystem block_system(const GroupSpec& s, std::uint64_t r) {
  if (!is_prime(r) || r == 2) throw std::invalid_argument("block_system: need odd prime r");
  if (s.q() % r == 0) throw std::invalid_argument("block_system: r divides q");
  BlockSystem bs;
  bs.r = r;
  std::uint64_t qm = s.q() % r;
  // generators of the eigenvalue-pairing subgroup A of (Z/r)^*
  std::vector<std::uint64_t> gens;
  switch (s.family) {
    case Family::PSL:
      gens = {qm};
      break;
    case Family::PSU:
      gens = {(r - qm) % r};
      break;
    default:
      gens = {qm, r - 1};
      break;
  }
  std::set<std::uint64_t> A = {1};
  bool grew = true;
  while (grew) {
    grew = false;
    std::set<std::uint64_t> snapshot = A;
    for (std::uint64_t a : snapshot)
      for (std::uint64_t g : gens)
        if (A.insert(mul_mod(a, g, r)).second) grew = true;
  }
  bs.c = static_cast<std::uint32_t>(A.size());
  if (bs.c != c_value(s, r))
    throw std::logic_error("block_system: order of A disagrees with the closed form");
  bs.s = static_cast<std::uint32_t>((r - 1) / bs.c);
  bs.block_of.assign(r, UINT32_MAX);
  for (std::uint64_t a = 1; a < r; ++a) {
    if (bs.block_of[a] != UINT32_MAX) continue;
    std::vector<std::uint32_t> blk;
    std::uint32_t idx = static_cast<std::uint32_t>(bs.blocks.size());
    for (std::uint64_t g : A) {
      std::uint64_t x = mul_mod(a, g, r);
      if (bs.block_of[x] == UINT32_MAX) {
        bs.block_of[x] = idx;
        blk.push_back(static_cast<std::uint32_t>(x));
      }
    }
    std::sort(blk.begin(), blk.end());
    bs.blocks.push_back(std::move(blk));
  }
  return bs;
}

std::string ClassLabel::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case LabelKind::Semisimple: {
      os << "blocks(";
      for (size_t i = 0; i < block_mult.size(); ++i) os << (i ? "," : "") << block_mult[i];
      os << ";e=" << fixed_dim << ")";
      if (splits) os << "+-";
      break;
    }
    case LabelKind::SemisimpleSplit: {
      os << "eig(";
      for (size_t i = 0; i < eig_mult.size(); ++i) os << (i ? "," : "") << eig_mult[i];
      os << ")";
      break;
    }
    case LabelKind::Unipotent: {
      if (decor != Decor2::None) {
        os << (decor == Decor2::A ? "a" : decor == Decor2::B ? "b" : "c") << ell;
      } else {
        os << "u[";
        for (size_t i = 0; i < jordan.parts.size(); ++i)
          os << (i ? "," : "") << jordan.parts[i];
        os << "]";
        if (class_multiplier > 1) os << "x" << class_multiplier;
      }
      break;
    }
    case LabelKind::Involution: {
      if (half_spin) {
        os << "halfspin";
      } else {
        os << "t" << minus_dim;
        if (tau != 0) os << (tau > 0 ? "+" : "-");
        if (tau_perp != 0) os << "/" << (tau_perp > 0 ? "+" : "-");
      }
      break;
    }
  }
  return os.str();
}

namespace {

// ---- semisimple, c >= 2 ---------------------------------------------------

void semisimple_block_enum(const GroupSpec& s, std::uint64_t r, EnumReport& rep) {
  BlockSystem bs = block_system(s, r);
  std::uint32_t n = s.n, c = bs.c, nb = bs.s;
  // type carried by a single c-dimensional eigenvalue block
  int eps_block = 0;
  if (s.orthogonal()) eps_block = (phi_rq(r, s.q()) % 2 == 0) ? -1 : +1;
  std::vector<std::uint32_t> b(nb, 0);
  auto emit = [&]() {
    std::uint64_t used = 0, tot = 0;
    for (std::uint32_t x : b) {
      used += std::uint64_t(x) * c;
      tot += x;
    }
    if (tot == 0 || used > n) return;
    std::uint32_t e = n - static_cast<std::uint32_t>(used);
    bool splits = false;
    if (s.orthogonal() && e == 0) {
      // no fixed space: the block types must multiply to the ambient type,
      // and then the stabilised decomposition yields two socle classes
      int eps_lbl = (tot % 2 == 0) ? +1 : eps_block;
      if (eps_lbl != form_eps(s)) return;
      splits = true;
    }
    ClassLabel lab;
    lab.kind = LabelKind::Semisimple;
    lab.block_mult = b;
    lab.fixed_dim = e;
    lab.splits = splits;
    rep.labels.push_back(std::move(lab));
  };
  std::function<void(std::uint32_t, std::uint64_t)> rec = [&](std::uint32_t idx,
                                                              std::uint64_t used) {
    if (idx == nb) {
      emit();
      return;
    }
    for (std::uint32_t v = 0; used + std::uint64_t(v) * c <= n; ++v) {
      b[idx] = v;
      rec(idx + 1, used + std::uint64_t(v) * c);
    }
    b[idx] = 0;
  };
  rec(0, 0);
  rep.class_count = 0;
  for (auto& lab : rep.labels) rep.class_count += lab.splits ? 2 : 1;
  // the dimension-4 symplectic group over F_2 is its derived subgroup, where
  // some of these classes split further
  rep.exact = !(s.family == Family::PSp && s.n == 4 && s.q() == 2);
}

// ---- semisimple, c == 1 ---------------------------------------------------

std::uint64_t binom_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t res = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (res > cap) return cap + 1;
    res = res * (a - i) / (i + 1);
  }
  return res;
}

void semisimple_c1_enum(const GroupSpec& s, std::uint64_t r, EnumReport& rep) {
  std::uint32_t n = s.n;
  // c = 1 only happens for the linear and unitary families
  std::uint64_t M = (s.family == Family::PSU) ? s.q() + 1 : s.q() - 1;
  if (M % r != 0) throw std::logic_error("c1 enumeration: r does not divide q - eps");
  unsigned vM = valuation(M, r);
  unsigned vn = (n % r == 0) ? valuation(n, r) : 0;
  bool det_binds = vM <= vn;
  rep.exact = !(n % r == 0 && vn < vM);
  if (binom_capped(n + r - 1, r - 1, 5000000) > 5000000)
    throw std::runtime_error("c1 enumeration: composition space too large");
  std::vector<std::uint32_t> m(r, 0);
  std::set<std::vector<std::uint32_t>> seen;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t idx,
                                                              std::uint32_t left) {
    if (idx + 1 == r) {
      m[idx] = left;
      std::uint32_t support = 0;
      for (std::uint32_t x : m) support += (x > 0);
      bool keep = support >= 2;
      if (keep && det_binds) {
        std::uint64_t wsum = 0;
        for (std::uint64_t j = 0; j < r; ++j) wsum += j * m[j];
        keep = wsum % r == 0;
      }
      if (keep) {
        auto canon = max_rotation(m);
        if (seen.insert(canon).second) {
          ClassLabel lab;
          lab.kind = LabelKind::SemisimpleSplit;
          lab.eig_mult = canon;
          rep.labels.push_back(std::move(lab));
        }
      }
      m[idx] = 0;
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      m[idx] = v;
      rec(idx + 1, left - v);
    }
    m[idx] = 0;
  };
  rec(0, n);
  std::sort(rep.labels.begin(), rep.labels.end(),
            [](const ClassLabel& a, const ClassLabel& b) { return a.eig_mult > b.eig_mult; });
  rep.class_count = rep.labels.size();
}

// ---- unipotent ------------------------------------------------------------

void unipotent_enum(const GroupSpec& s, EnumReport& rep) {
  std::uint64_t p = s.p, q = s.q();
  std::uint32_t n = s.n;
  bool formed = s.family == Family::PSp || s.orthogonal();
  if (p == 2 && formed) {
    if (s.family == Family::PSp && n == 4 && q == 2) {
      // derived subgroup: one involution class, of shape (2,2)
      ClassLabel lab;
      lab.kind = LabelKind::Unipotent;
      lab.jordan.parts = {2, 2};
      lab.decor = Decor2::A;
      lab.ell = 2;
      rep.labels.push_back(std::move(lab));
      rep.class_count = 1;
      rep.exact = true;
      return;
    }
    std::uint32_t m = n / 2;
    auto push = [&](Decor2 d, std::uint32_t ell) {
      ClassLabel lab;
      lab.kind = LabelKind::Unipotent;
      lab.decor = d;
      lab.ell = ell;
      lab.jordan.parts.assign(ell, 2u);
      lab.jordan.parts.resize(n - ell, 1u);  // 2^ell 1^(n-2ell)
      for (std::uint32_t i = 0; i < ell; ++i) lab.jordan.parts[i] = 2;
      rep.labels.push_back(std::move(lab));
    };
    for (std::uint32_t ell = 2; ell <= m; ell += 2) {
      if (s.orthogonal() && ell == m && form_eps(s) != +1) continue;
      push(Decor2::A, ell);
    }
    if (s.family == Family::PSp)
      for (std::uint32_t ell = 1; ell <= m; ell += 2) push(Decor2::B, ell);
    for (std::uint32_t ell = 2; ell <= m; ell += 2) push(Decor2::C, ell);
    rep.class_count = rep.labels.size();
    // complete for the symplectic family; orthogonal boundary labels can
    // split further in the socle
    rep.exact = (s.family == Family::PSp);
    return;
  }
  auto parts = p_bounded_partitions(n, static_cast<unsigned>(std::min<std::uint64_t>(p, n)));
  for (auto& lam : parts) {
    if (lam.parts.size() == n) continue;  // identity shape
    if (s.family == Family::PSp || s.orthogonal()) {
      bool even_family = s.family == Family::PSp;  // odd parts need even multiplicity
      bool ok = true;
      for (size_t i = 0; i < lam.parts.size();) {
        size_t j = i;
        while (j < lam.parts.size() && lam.parts[j] == lam.parts[i]) ++j;
        bool odd_part = lam.parts[i] % 2 == 1;
        if ((even_family ? odd_part : !odd_part) && (j - i) % 2 == 1) ok = false;
        i = j;
      }
      if (!ok) continue;
    }
    ClassLabel lab;
    lab.kind = LabelKind::Unipotent;
    lab.jordan = lam;
    if (s.family == Family::PSL || s.family == Family::PSU) {
      std::uint64_t M = (s.family == Family::PSU) ? q + 1 : q - 1;
      lab.class_multiplier = std::gcd(M, (std::uint64_t)lam.parts_gcd());
    }
    rep.labels.push_back(std::move(lab));
  }
  rep.class_count = 0;
  for (auto& lab : rep.labels) rep.class_count += lab.class_multiplier;
  // linear and unitary shape lists with multipliers are complete; the formed
  // families in odd characteristic ignore form decorations
  rep.exact = (s.family == Family::PSL || s.family == Family::PSU);
}

// ---- involutions, q odd ---------------------------------------------------

// is some odd power lambda = g^j of a generator of the order-M scalar group
// a legal twist, i.e. (-lambda)^(n/2) = 1
bool half_spin_exists_lu(std::uint32_t n, std::uint64_t M) {
  if (n % 2 != 0 || M % 2 != 0) return false;
  if (M > 1000000) throw std::runtime_error("half-spin scan: scalar group too large");
  for (std::uint64_t j = 1; j < 2 * M; j += 2)
    if (((M / 2 + j) * (n / 2)) % M == 0) return true;
  return false;
}

void involution_enum(const GroupSpec& s, EnumReport& rep) {
  std::uint32_t n = s.n;
  std::uint64_t q = s.q();
  if (q % 2 == 0) throw std::logic_error("involution enumeration needs odd q");
  switch (s.family) {
    case Family::PSL:
    case Family::PSU: {
      std::uint64_t M = (s.family == Family::PSU) ? q + 1 : q - 1;
      bool odd_ok = valuation(std::gcd((std::uint64_t)n, M), 2) < valuation(M, 2);
      for (std::uint32_t ell = 1; 2 * ell <= n; ++ell) {
        if (ell % 2 == 1 && !odd_ok) continue;
        ClassLabel lab;
        lab.kind = LabelKind::Involution;
        lab.minus_dim = ell;
        rep.labels.push_back(std::move(lab));
      }
      if (half_spin_exists_lu(n, M)) {
        ClassLabel lab;
        lab.kind = LabelKind::Involution;
        lab.minus_dim = n / 2;
        lab.half_spin = true;
        rep.labels.push_back(std::move(lab));
      }
      rep.exact = true;
      break;
    }
    case Family::PSp: {
      for (std::uint32_t w = 2; w <= n / 2; w += 2) {
        ClassLabel lab;
        lab.kind = LabelKind::Involution;
        lab.minus_dim = w;
        rep.labels.push_back(std::move(lab));
      }
      ClassLabel hs;
      hs.kind = LabelKind::Involution;
      hs.minus_dim = n / 2;
      hs.half_spin = true;
      rep.labels.push_back(std::move(hs));
      rep.exact = (n == 4);
      break;
    }
    case Family::OmegaOdd: {
      for (std::uint32_t ell = 1; 2 * ell <= n - 1; ++ell) {
        ClassLabel lab;
        lab.kind = LabelKind::Involution;
        lab.minus_dim = 2 * ell;
        lab.tau = disc_square_tau(ell, q);
        rep.labels.push_back(std::move(lab));
      }
      rep.exact = true;
      break;
    }
    case Family::POmegaPlus:
    case Family::POmegaMinus: {
      int eps = form_eps(s);
      for (std::uint32_t w = 2; 2 * w <= n; w += 2) {
        std::uint32_t ell = w / 2, ellp = (n - w) / 2;
        for (int t : {+1, -1}) {
          int tp = eps * t;  // orthogonal-sum types multiply
          bool member = (t == disc_square_tau(ell, q)) || (tp == disc_square_tau(ellp, q));
          if (!member) continue;
          if (2 * w == n && eps == -1 && t == -1) continue;  // unordered {+,-} once
          ClassLabel lab;
          lab.kind = LabelKind::Involution;
          lab.minus_dim = w;
          lab.tau = t;
          lab.tau_perp = tp;
          rep.labels.push_back(std::move(lab));
        }
      }
      bool hs_present =
          (n % 4 == 0) ? (eps == +1) : ((q % 8) == (eps == +1 ? 1u : 7u));
      if (hs_present) {
        ClassLabel lab;
        lab.kind = LabelKind::Involution;
        lab.minus_dim = n / 2;
        lab.half_spin = true;
        rep.labels.push_back(std::move(lab));
      }
      rep.exact = false;  // spin-level refinements are not tracked
      break;
    }
  }
  rep.class_count = rep.labels.size();
}

}  // namespace

EnumReport enumerate_element_classes(const GroupSpec& s, std::uint64_t r) {
  if (!is_prime(r)) throw std::invalid_argument("enumerate_element_classes: r must be prime");
  if (r_valuation(s, r) == 0)
    throw std::invalid_argument("enumerate_element_classes: no element of order r");
  EnumReport rep;
  if (r == s.p) {
    unipotent_enum(s, rep);
    return rep;
  }
  if (r == 2) {
    involution_enum(s, rep);
    return rep;
  }
  if (c_value(s, r) >= 2)
    semisimple_block_enum(s, r, rep);
  else
    semisimple_c1_enum(s, r, rep);
  return rep;
}

SubgroupReport enumerate_subgroup_classes(const GroupSpec& s, std::uint64_t r) {
  if (!is_prime(r) || r == 2 || r == s.p)
    throw std::invalid_argument("enumerate_subgroup_classes: need an odd prime r != p");
  EnumReport rep = enumerate_element_classes(s, r);
  SubgroupReport out;
  out.exact = rep.exact;
  out.labels = rep.labels;
  std::uint64_t g = primitive_root_mod(r);
  std::uint32_t c = c_value(s, r);
  std::vector<char> done(rep.labels.size(), 0);
  if (c >= 2) {
    BlockSystem bs = block_system(s, r);
    // block permutation induced by multiplication by a primitive root
    std::vector<std::uint32_t> sigma(bs.s);
    for (std::uint32_t j = 0; j < bs.s; ++j)
      sigma[j] = bs.block_of[mul_mod(bs.blocks[j][0], g, r)];
    auto index_of = [&](const std::vector<std::uint32_t>& bm, std::uint32_t e) -> size_t {
      for (size_t k = 0; k < rep.labels.size(); ++k)
        if (rep.labels[k].block_mult == bm && rep.labels[k].fixed_dim == e) return k;
      throw std::logic_error("subgroup orbits: image label missing");
    };
    for (size_t i = 0; i < rep.labels.size(); ++i) {
      if (done[i]) continue;
      std::vector<std::uint32_t> orbit;
      std::vector<std::uint32_t> cur = rep.labels[i].block_mult;
      std::uint32_t e = rep.labels[i].fixed_dim;
      for (;;) {
        size_t k = index_of(cur, e);
        if (!done[k]) {
          done[k] = 1;
          orbit.push_back(static_cast<std::uint32_t>(k));
        }
        std::vector<std::uint32_t> nxt(bs.s);
        for (std::uint32_t j = 0; j < bs.s; ++j) nxt[sigma[j]] = cur[j];
        if (nxt == rep.labels[i].block_mult) break;
        cur = std::move(nxt);
      }
      out.orbits.push_back(std::move(orbit));
    }
  } else {
    auto index_of = [&](const std::vector<std::uint32_t>& m) -> size_t {
      for (size_t k = 0; k < rep.labels.size(); ++k)
        if (rep.labels[k].eig_mult == m) return k;
      throw std::logic_error("subgroup orbits: image label missing");
    };
    for (size_t i = 0; i < rep.labels.size(); ++i) {
      if (done[i]) continue;
      std::vector<std::uint32_t> orbit;
      std::vector<std::uint32_t> cur = rep.labels[i].eig_mult;
      for (;;) {
        size_t k = index_of(cur);
        if (!done[k]) {
          done[k] = 1;
          orbit.push_back(static_cast<std::uint32_t>(k));
        }
        // the power map x -> x^g multiplies eigenvalue exponents by g
        std::vector<std::uint32_t> nxt(r, 0);
        for (std::uint64_t j = 0; j < r; ++j) nxt[mul_mod(j, g, r)] = cur[j];
        nxt = max_rotation(nxt);
        if (nxt == rep.labels[i].eig_mult) break;
        cur = std::move(nxt);
      }
      out.orbits.push_back(std::move(orbit));
    }
  }
  out.count = out.orbits.size();
  return out;
}

std::uint32_t nu_of_label(const GroupSpec& s, const ClassLabel& lab) {
  std::uint32_t n = s.n;
  switch (lab.kind) {
    case LabelKind::Semisimple: {
      // over the algebraic closure each eigenvalue inside a Frobenius block of
      // multiplicity b has a b-dimensional eigenspace; the block spans b*c
      // dimensions but no single eigenvalue does
      std::uint32_t mx = lab.fixed_dim;
      for (std::uint32_t b : lab.block_mult) mx = std::max(mx, b);
      return n - mx;
    }
    case LabelKind::SemisimpleSplit: {
      std::uint32_t mx = *std::max_element(lab.eig_mult.begin(), lab.eig_mult.end());
      return n - mx;
    }
    case LabelKind::Unipotent: {
      if (lab.decor != Decor2::None) return lab.ell;
      return n - static_cast<std::uint32_t>(lab.jordan.parts.size());
    }
    case LabelKind::Involution: {
      if (lab.half_spin) return n / 2;
      return std::min(lab.minus_dim, n - lab.minus_dim);
    }
  }
  return 0;
}

std::optional<ClassLabel> guralnick_saxl_witness(const GroupSpec& s, std::uint64_t r) {
  std::uint32_t n = s.n;
  if (n < 6) return std::nullopt;
  ClassLabel lab;
  if (r == s.p) {
    lab.kind = LabelKind::Unipotent;
    if (s.p == 2) {
      if (s.family == Family::PSp || s.orthogonal()) {
        lab.decor = Decor2::A;
        lab.ell = 2;
        lab.jordan.parts.assign(2, 2u);
        lab.jordan.parts.resize(n - 2, 1u);
        lab.jordan.parts[0] = lab.jordan.parts[1] = 2;
      } else {
        lab.jordan.parts.assign(1, 2u);
        lab.jordan.parts.resize(n - 1, 1u);
        lab.jordan.parts[0] = 2;
      }
    } else {
      lab.jordan.parts.assign(2, 2u);
      lab.jordan.parts.resize(n - 2, 1u);
      lab.jordan.parts[0] = lab.jordan.parts[1] = 2;
    }
    return lab;
  }
  if (r == 2) {
    lab.kind = LabelKind::Involution;
    lab.minus_dim = 2;
    if (s.orthogonal()) {
      lab.tau = disc_square_tau(1, s.q());
      int eps = form_eps(s);
      if (eps != 0) lab.tau_perp = eps * lab.tau;
    }
    return lab;
  }
  std::uint32_t c = c_value(s, r);
  if (!(c <= 2 || 4ull * c * c <= n)) return std::nullopt;
  if (c >= 2) {
    BlockSystem bs = block_system(s, r);
    lab.kind = LabelKind::Semisimple;
    lab.block_mult.assign(bs.s, 0);
    lab.block_mult[0] = 1;
    lab.fixed_dim = n - c;
    return lab;
  }
  std::uint64_t M = (s.family == Family::PSU) ? s.q() + 1 : s.q() - 1;
  unsigned vM = valuation(M, r);
  unsigned vn = (n % r == 0) ? valuation(n, r) : 0;
  std::vector<std::uint32_t> m(r, 0);
  if (vM <= vn) {
    m[0] = n - 2;
    m[1] = 1;
    m[r - 1] = 1;
  } else {
    m[0] = n - 1;
    m[1] = 1;
  }
  lab.kind = LabelKind::SemisimpleSplit;
  lab.eig_mult = max_rotation(m);
  return lab;
}

}  // namespace elusive
