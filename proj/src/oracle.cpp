#include "elusive/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace elusive {

const char* form_type_name(FormType t) {
  switch (t) {
    case FormType::Plus: return "plus";
    case FormType::Minus: return "minus";
    case FormType::Odd: return "odd";
    case FormType::Degenerate: return "degenerate";
    case FormType::Symplectic: return "symplectic";
  }
  return "?";
}

Partition jordan_partition(const Mat& m, std::int64_t p) {
  const int n = (int)m.rows();
  if (m.cols() != n) throw std::invalid_argument("jordan_partition: square matrix required");
  Mat nil = mat_mod(m, p);
  for (int i = 0; i < n; ++i) nil(i, i) = (nil(i, i) + p - 1) % p;
  std::vector<int> rk;  // rk[k] = rank(nil^(k+1))
  Mat pw = nil;
  for (int k = 0; k < n; ++k) {
    rk.push_back(rank_mod(pw, p));
    if (rk.back() == 0) break;
    pw = mat_mul_mod(pw, nil, p);
  }
  if (rk.back() != 0) throw std::invalid_argument("jordan_partition: matrix is not unipotent");
  // blocks of size >= k+1: rank(nil^k) - rank(nil^(k+1))
  std::vector<int> atleast;
  int prev = n;
  for (int r : rk) {
    atleast.push_back(prev - r);
    prev = r;
  }
  Partition out;
  for (int s = (int)atleast.size(); s >= 1; --s) {
    int cnt = atleast[s - 1] - (s < (int)atleast.size() ? atleast[s] : 0);
    for (int t = 0; t < cnt; ++t) out.parts.push_back((unsigned)s);
  }
  std::sort(out.parts.begin(), out.parts.end(), std::greater<unsigned>());
  return out;
}

namespace {

// determinant over F_p by elimination; returns 0 for singular
std::int64_t det_mod(Mat a, std::int64_t p) {
  const int n = (int)a.rows();
  a = mat_mod(std::move(a), p);
  std::int64_t det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = p - det;
    }
    det = det * a(col, col) % p;
    std::int64_t inv = inv_mod(a(col, col), p);
    for (int r = col + 1; r < n; ++r) {
      std::int64_t f = a(r, col) * inv % p;
      if (!f) continue;
      for (int cc = col; cc < n; ++cc) a(r, cc) = ((a(r, cc) - f * a(col, cc)) % p + p) % p;
    }
  }
  return det % p;
}

}  // namespace

FormType classify_quadratic_form(const Mat& gram, std::int64_t p) {
  if (p == 2) throw std::invalid_argument("classify_quadratic_form: use the char-2 variant");
  const int n = (int)gram.rows();
  std::int64_t d = det_mod(gram, p);
  if (d == 0) return FormType::Degenerate;
  if (n % 2 == 1) return FormType::Odd;
  // discriminant times (-1)^(n/2): square exactly for hyperbolic type
  std::int64_t s = (n / 2) % 2 == 0 ? d : (p - d) % p;
  return legendre(s, (std::uint64_t)p) == 1 ? FormType::Plus : FormType::Minus;
}

FormType classify_quadratic_form2(const std::vector<int>& q_diag, const Mat& gram) {
  const int n = (int)gram.rows();
  if ((int)q_diag.size() != n) throw std::invalid_argument("classify_quadratic_form2: size mismatch");
  if (n % 2 == 1 || n == 0 || n > 28) return FormType::Degenerate;
  std::vector<std::uint32_t> below(n, 0);  // polarization bits b(i,j), j < i
  std::uint32_t qbits = 0;
  for (int i = 0; i < n; ++i) {
    if (q_diag[i] & 1) qbits |= 1u << i;
    for (int j = 0; j < i; ++j)
      if (gram(i, j) & 1) below[i] |= 1u << j;
  }
  std::uint64_t zeros = 0;
  const std::uint32_t top = 1u << n;
  for (std::uint32_t x = 0; x < top; ++x) {
    std::uint32_t rem = x;
    int acc = __builtin_popcount(x & qbits);
    while (rem) {
      int i = __builtin_ctz(rem);
      rem &= rem - 1;
      acc ^= __builtin_popcount(below[i] & x) & 1;
    }
    if (!(acc & 1)) ++zeros;
  }
  const std::uint64_t half = top / 2, dev = (std::uint64_t)1 << (n / 2 - 1);
  if (zeros == half + dev) return FormType::Plus;
  if (zeros == half - dev) return FormType::Minus;
  return FormType::Degenerate;
}

Mat restrict_bilinear(const Mat& b, const Mat& basis, std::int64_t p) {
  Mat bt = basis.transpose();
  return mat_mul_mod(mat_mul_mod(bt, b, p), basis, p);
}

int eigenspace_dim(const Mat& m, const Field& f, std::uint64_t w) {
  const int n = (int)m.rows();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t v = m(i, j) % (std::int64_t)f.p;
      if (v < 0) v += f.p;
      a[i][j] = f.scalar((std::uint64_t)v);
      if (i == j) a[i][j] = f.sub(a[i][j], w);
    }
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (a[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    std::uint64_t inv = f.inv(a[rank][col]);
    for (int cc = 0; cc < n; ++cc) a[rank][cc] = f.mul(a[rank][cc], inv);
    for (int r = 0; r < n; ++r) {
      if (r == rank || !a[r][col]) continue;
      std::uint64_t fac = a[r][col];
      for (int cc = 0; cc < n; ++cc) a[r][cc] = f.sub(a[r][cc], f.mul(fac, a[rank][cc]));
    }
    ++rank;
  }
  return n - rank;
}

// ---------------------------------------------------------------------------

FqMat fq_identity(std::uint32_t n) {
  FqMat m;
  m.n = n;
  m.a.assign((std::size_t)n * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMat fq_mul(const Field& f, const FqMat& x, const FqMat& y) {
  assert(x.n == y.n);
  FqMat z;
  z.n = x.n;
  z.a.assign((std::size_t)x.n * x.n, 0);
  for (std::uint32_t i = 0; i < x.n; ++i)
    for (std::uint32_t k = 0; k < x.n; ++k) {
      std::uint8_t v = x.at(i, k);
      if (!v) continue;
      for (std::uint32_t j = 0; j < x.n; ++j) {
        std::uint8_t w = y.at(k, j);
        if (!w) continue;
        z.at(i, j) = (std::uint8_t)f.add(z.at(i, j), f.mul(v, w));
      }
    }
  return z;
}

bool fq_equal(const FqMat& x, const FqMat& y) { return x.n == y.n && x.a == y.a; }

std::uint64_t fq_key(const Field& f, const FqMat& m) {
  std::uint64_t k = 0;
  for (std::uint8_t v : m.a) k = k * f.q + v;
  return k;
}

FqMat fq_canonical_projective(const Field& f, FqMat m) {
  for (std::uint8_t v : m.a) {
    if (!v) continue;
    if (v != 1) {
      std::uint64_t s = f.inv(v);
      for (auto& e : m.a) e = (std::uint8_t)f.mul(e, s);
    }
    break;
  }
  return m;
}

FqMat fq_decode(const Field& f, std::uint32_t n, std::uint64_t key) {
  FqMat m;
  m.n = n;
  m.a.assign((std::size_t)n * n, 0);
  for (int i = (int)m.a.size() - 1; i >= 0; --i) {
    m.a[i] = (std::uint8_t)(key % f.q);
    key /= f.q;
  }
  return m;
}

std::uint32_t Closure::id_of(const FqMat& m) const {
  FqMat c = projective ? fq_canonical_projective(*f, m) : m;
  auto it = index.find(fq_key(*f, c));
  if (it == index.end()) throw std::out_of_range("closure: element not in group");
  return it->second;
}

std::uint32_t Closure::mul(std::uint32_t x, std::uint32_t y) const {
  return id_of(fq_mul(*f, mat(x), mat(y)));
}

std::uint32_t Closure::inverse(std::uint32_t x) const {
  std::uint64_t o = element_order(*this, x);
  std::uint32_t z = 0;
  for (std::uint64_t i = 0; i + 1 < o; ++i) z = mul(z, x);
  return z;
}

Closure small_group_closure(const Field& f, const std::vector<FqMat>& gens,
                            bool projective, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators");
  const std::uint32_t n = gens[0].n;
  double bits = (double)n * n * std::log2((double)f.q);
  if (bits > 63.5) throw std::invalid_argument("closure: key space exceeds 64 bits");
  Closure c;
  c.f = &f;
  c.n = n;
  c.projective = projective;
  auto insert = [&](FqMat m) -> std::pair<std::uint32_t, bool> {
    if (projective) m = fq_canonical_projective(f, m);
    std::uint64_t key = fq_key(f, m);
    auto it = c.index.find(key);
    if (it != c.index.end()) return {it->second, false};
    std::uint32_t id = (std::uint32_t)c.keys.size();
    if (id >= cap) throw std::length_error("closure: cap exceeded");
    c.index.emplace(key, id);
    c.keys.push_back(key);
    return {id, true};
  };
  insert(fq_identity(n));
  std::vector<FqMat> gmats;
  for (const auto& g : gens) {
    if (g.n != n) throw std::invalid_argument("closure: generator size mismatch");
    FqMat cg = projective ? fq_canonical_projective(f, g) : g;
    c.gen_ids.push_back(insert(cg).first);
  }
  for (std::uint32_t g : c.gen_ids) gmats.push_back(c.mat(g));
  std::deque<std::uint32_t> work;
  for (std::uint32_t i = 0; i < (std::uint32_t)c.keys.size(); ++i) work.push_back(i);
  while (!work.empty()) {
    std::uint32_t x = work.front();
    work.pop_front();
    FqMat xm = c.mat(x);
    for (const auto& gm : gmats) {
      auto [id, fresh] = insert(fq_mul(f, xm, gm));
      if (fresh) work.push_back(id);
    }
  }
  return c;
}

std::vector<std::uint32_t> subgroup_closure(const Closure& c,
                                            const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> out;
  std::vector<bool> seen(c.size(), false);
  std::deque<std::uint32_t> work;
  auto push = [&](std::uint32_t x) {
    if (!seen[x]) {
      seen[x] = true;
      out.push_back(x);
      work.push_back(x);
    }
  };
  push(0);
  for (std::uint32_t g : gens) push(g);
  while (!work.empty()) {
    std::uint32_t x = work.front();
    work.pop_front();
    for (std::uint32_t g : gens) push(c.mul(x, g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t element_order(const Closure& c, std::uint32_t x) {
  std::uint64_t o = 1;
  std::uint32_t z = x;
  while (z != 0) {
    z = c.mul(z, x);
    ++o;
    if (o > c.size()) throw std::logic_error("closure: order runaway");
  }
  return o;
}

std::vector<std::vector<std::uint32_t>> classes_of_order(const Closure& c, std::uint64_t r) {
  // members of order exactly r, via matrix powering
  std::vector<std::uint32_t> members;
  for (std::uint32_t x = 1; x < (std::uint32_t)c.size(); ++x) {
    FqMat pw = fq_identity(c.n), base = c.mat(x);
    std::uint64_t e = r;
    while (e) {
      if (e & 1) pw = fq_mul(*c.f, pw, base);
      base = fq_mul(*c.f, base, base);
      e >>= 1;
    }
    if (c.id_of(pw) == 0) members.push_back(x);
  }
  std::vector<bool> is_member(c.size(), false);
  for (auto x : members) is_member[x] = true;
  // precompute generator matrices with inverses for conjugation orbits
  std::vector<std::pair<FqMat, FqMat>> conj;
  for (std::uint32_t g : c.gen_ids)
    conj.push_back({c.mat(g), c.mat(c.inverse(g))});
  std::vector<bool> visited(c.size(), false);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t x : members) {
    if (visited[x]) continue;
    std::vector<std::uint32_t> cls;
    std::deque<std::uint32_t> work{x};
    visited[x] = true;
    while (!work.empty()) {
      std::uint32_t y = work.front();
      work.pop_front();
      cls.push_back(y);
      for (const auto& [g, ginv] : conj) {
        FqMat z = fq_mul(*c.f, fq_mul(*c.f, ginv, c.mat(y)), g);
        std::uint32_t zid = c.id_of(z);
        if (!visited[zid]) {
          visited[zid] = true;
          work.push_back(zid);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    assert(is_member[cls.front()]);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

DerangementReport derangement_search(const Closure& c,
                                     const std::vector<std::uint32_t>& h0, std::uint64_t r) {
  DerangementReport rep;
  auto classes = classes_of_order(c, r);
  rep.classes_total = classes.size();
  for (const auto& cls : classes) {
    bool meets = false;
    for (std::uint32_t y : cls)
      if (std::binary_search(h0.begin(), h0.end(), y)) {
        meets = true;
        break;
      }
    if (!meets) rep.derangement_reps.push_back(cls.front());
  }
  return rep;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> find_a5_pair(const Closure& c) {
  std::vector<std::uint32_t> twos, threes;
  for (std::uint32_t x = 1; x < (std::uint32_t)c.size(); ++x) {
    if (c.mul(x, x) == 0) twos.push_back(x);
    else if (c.mul(c.mul(x, x), x) == 0) threes.push_back(x);
  }
  for (std::uint32_t a : twos)
    for (std::uint32_t b : threes) {
      std::uint32_t ab = c.mul(a, b);
      std::uint32_t p2 = c.mul(ab, ab);
      if (c.mul(c.mul(p2, p2), ab) == 0 && p2 != 0 && ab != 0) return {{a, b}};
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::vector<FqMat> sl_generators(const Field& f, std::uint32_t n) {
  std::uint64_t g = f.q > 2 ? element_of_order(f, f.q - 1) : 1;
  std::vector<FqMat> out;
  std::uint64_t alpha = 1;
  for (std::uint32_t t = 0; t < f.k; ++t) {
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
      FqMat up = fq_identity(n), dn = fq_identity(n);
      up.at(i, i + 1) = (std::uint8_t)alpha;
      dn.at(i + 1, i) = (std::uint8_t)alpha;
      out.push_back(up);
      out.push_back(dn);
    }
    alpha = f.mul(alpha, g);
  }
  return out;
}

std::vector<FqMat> sp_generators(const Field& f, std::uint32_t n) {
  if (n % 2) throw std::invalid_argument("sp_generators: even dimension required");
  const std::uint32_t m = n / 2;
  // Gram J for basis (e_1..e_m, f_1..f_m)
  auto bform = [&](const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      acc = f.add(acc, f.mul(x[i], y[m + i]));
      acc = f.sub(acc, f.mul(x[m + i], y[i]));
    }
    return acc;
  };
  std::vector<std::vector<std::uint8_t>> dirs;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::uint8_t> v(n, 0);
    v[i] = 1;
    dirs.push_back(v);
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) {
      std::vector<std::uint8_t> v(n, 0);
      v[i] = v[j] = 1;
      dirs.push_back(v);
    }
  std::uint64_t g = f.q > 2 ? element_of_order(f, f.q - 1) : 1;
  std::vector<FqMat> out;
  std::uint64_t lambda = 1;
  for (std::uint32_t t = 0; t < f.k; ++t) {
    for (const auto& v : dirs) {
      // transvection x -> x + lambda * B(x, v) * v
      FqMat mtx = fq_identity(n);
      for (std::uint32_t col = 0; col < n; ++col) {
        std::vector<std::uint8_t> e(n, 0);
        e[col] = 1;
        std::uint64_t coef = f.mul(lambda, bform(e, v));
        for (std::uint32_t row = 0; row < n; ++row)
          mtx.at(row, col) = (std::uint8_t)f.add(mtx.at(row, col), f.mul(coef, v[row]));
      }
      out.push_back(mtx);
    }
    lambda = f.mul(lambda, g);
  }
  return out;
}

}  // namespace elusive
