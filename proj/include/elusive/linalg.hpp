#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace elusive {

using Mat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

std::int64_t inv_mod(std::int64_t a, std::int64_t p);

// entrywise reduction into [0, p)
Mat mat_mod(Mat a, std::int64_t p);

Mat mat_mul_mod(const Mat& a, const Mat& b, std::int64_t p);
Mat mat_pow_mod(Mat a, std::uint64_t e, std::int64_t p);

// rank over F_p by Gaussian elimination
int rank_mod(Mat a, std::int64_t p);

// solves a*x = b over F_p when consistent; returns false otherwise
bool solve_mod(const Mat& a, const Vec& b, std::int64_t p, Vec& x);

Mat mat_inv_mod(const Mat& a, std::int64_t p);

}  // namespace elusive
