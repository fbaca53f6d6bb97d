#include "elusive/linalg.hpp"

#include <stdexcept>

namespace elusive {

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("inv_mod: zero");
  // extended Euclid
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::invalid_argument("inv_mod: not invertible");
  s0 %= p;
  if (s0 < 0) s0 += p;
  return s0;
}

Mat mat_mod(Mat a, std::int64_t p) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      std::int64_t v = a(i, j) % p;
      if (v < 0) v += p;
      a(i, j) = v;
    }
  return a;
}

Mat mat_mul_mod(const Mat& a, const Mat& b, std::int64_t p) { return mat_mod(a * b, p); }

Mat mat_pow_mod(Mat a, std::uint64_t e, std::int64_t p) {
  const Eigen::Index n = a.rows();
  Mat acc = Mat::Identity(n, n);
  a = mat_mod(std::move(a), p);
  while (e) {
    if (e & 1) acc = mat_mul_mod(acc, a, p);
    a = mat_mul_mod(a, a, p);
    e >>= 1;
  }
  return acc;
}

int rank_mod(Mat a, std::int64_t p) {
  a = mat_mod(std::move(a), p);
  const Eigen::Index rows = a.rows(), cols = a.cols();
  int rank = 0;
  Eigen::Index pr = 0;
  for (Eigen::Index pc = 0; pc < cols && pr < rows; ++pc) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = pr; i < rows; ++i)
      if (a(i, pc) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(pr).swap(a.row(piv));
    const std::int64_t inv = inv_mod(a(pr, pc), p);
    for (Eigen::Index j = pc; j < cols; ++j) a(pr, j) = a(pr, j) * inv % p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == pr || a(i, pc) == 0) continue;
      const std::int64_t f = a(i, pc);
      for (Eigen::Index j = pc; j < cols; ++j) {
        std::int64_t v = (a(i, j) - f * a(pr, j)) % p;
        if (v < 0) v += p;
        a(i, j) = v;
      }
    }
    ++pr;
    ++rank;
  }
  return rank;
}

bool solve_mod(const Mat& a, const Vec& b, std::int64_t p, Vec& x) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Mat aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  aug = mat_mod(std::move(aug), p);
  Eigen::Index pr = 0;
  std::vector<Eigen::Index> pivot_col;
  for (Eigen::Index pc = 0; pc < cols && pr < rows; ++pc) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = pr; i < rows; ++i)
      if (aug(i, pc) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    aug.row(pr).swap(aug.row(piv));
    const std::int64_t inv = inv_mod(aug(pr, pc), p);
    for (Eigen::Index j = pc; j <= cols; ++j) aug(pr, j) = aug(pr, j) * inv % p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == pr || aug(i, pc) == 0) continue;
      const std::int64_t f = aug(i, pc);
      for (Eigen::Index j = pc; j <= cols; ++j) {
        std::int64_t v = (aug(i, j) - f * aug(pr, j)) % p;
        if (v < 0) v += p;
        aug(i, j) = v;
      }
    }
    pivot_col.push_back(pc);
    ++pr;
  }
  for (Eigen::Index i = pr; i < rows; ++i)
    if (aug(i, cols) != 0) return false;
  x = Vec::Zero(cols);
  for (Eigen::Index k = 0; k < pr; ++k) x(pivot_col[k]) = aug(k, cols);
  return true;
}

Mat mat_inv_mod(const Mat& a, std::int64_t p) {
  const Eigen::Index n = a.rows();
  Mat aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat::Identity(n, n);
  aug = mat_mod(std::move(aug), p);
  for (Eigen::Index pc = 0; pc < n; ++pc) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = pc; i < n; ++i)
      if (aug(i, pc) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::invalid_argument("mat_inv_mod: singular");
    aug.row(pc).swap(aug.row(piv));
    const std::int64_t inv = inv_mod(aug(pc, pc), p);
    for (Eigen::Index j = 0; j < 2 * n; ++j) aug(pc, j) = aug(pc, j) * inv % p;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == pc || aug(i, pc) == 0) continue;
      const std::int64_t f = aug(i, pc);
      for (Eigen::Index j = 0; j < 2 * n; ++j) {
        std::int64_t v = (aug(i, j) - f * aug(pc, j)) % p;
        if (v < 0) v += p;
        aug(i, j) = v;
      }
    }
  }
  return aug.rightCols(n);
}

}  // namespace elusive
