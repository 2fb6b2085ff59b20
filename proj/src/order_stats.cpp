#include "nray/order_stats.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace nray {

double permanent(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("permanent: not square");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;
  if (n > 12) throw std::length_error("permanent: size capped at 12");

  // Ryser: per(A) = (-1)^n sum_{S != empty} (-1)^|S| prod_i sum_{j in S} a_ij
  Eigen::VectorXd row_sum = Eigen::VectorXd::Zero(n);
  double total = 0.0;
  std::uint32_t gray = 0;
  int popcount = 0;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t k = 1; k < limit; ++k) {
    std::uint32_t next_gray = k ^ (k >> 1);
    std::uint32_t changed = gray ^ next_gray;
    int j = std::countr_zero(changed);
    if (next_gray & changed) {
      row_sum += a.col(j);
      ++popcount;
    } else {
      row_sum -= a.col(j);
      --popcount;
    }
    gray = next_gray;
    double prod = row_sum.prod();
    total += ((n - popcount) % 2 == 0) ? prod : -prod;
  }
  return total;
}

double cdf_ith_order(const Eigen::VectorXd& cdfs, int i) {
  const int n = static_cast<int>(cdfs.size());
  if (n < 1) throw std::invalid_argument("cdf_ith_order: empty CDF vector");
  if (i < 1 || i > n) throw std::out_of_range("cdf_ith_order: rank out of range");

  Eigen::VectorXd comp = Eigen::VectorXd::Ones(n) - cdfs;
  double acc = 0.0;
  for (int k = i; k <= n; ++k) {
    Eigen::MatrixXd a(n, n);
    for (int c = 0; c < n; ++c) a.col(c) = (c < k) ? cdfs : comp;
    double log_fact = std::lgamma(k + 1.0) + std::lgamma(n - k + 1.0);
    acc += permanent(a) * std::exp(-log_fact);
  }
  return acc;
}

double cdf_max(const Eigen::VectorXd& cdfs) {
  if (cdfs.size() < 1) throw std::invalid_argument("cdf_max: empty CDF vector");
  return cdfs.prod();
}

}  // namespace nray
