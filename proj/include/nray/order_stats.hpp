#pragma once

#include <Eigen/Core>

namespace nray {

/// Matrix permanent by Ryser's inclusion-exclusion with Gray-code subset
/// enumeration. Exact up to rounding; size capped at 12.
double permanent(const Eigen::MatrixXd& a);

/// CDF of the i-th order statistic (ascending, i = N is the maximum) of N
/// independent, non-identically distributed variables whose marginal CDFs at
/// the evaluation point are given in `cdfs`:
///   Pr(g_(i) <= g) = sum_{k=i}^{N} per(A_k) / (k! (N-k)!)
/// where A_k stacks k column copies of F and N-k copies of 1-F.
double cdf_ith_order(const Eigen::VectorXd& cdfs, int i);

/// CDF of the maximum: prod_i F_i. Equals cdf_ith_order(cdfs, N).
double cdf_max(const Eigen::VectorXd& cdfs);

}  // namespace nray
