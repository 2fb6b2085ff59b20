#pragma once

#include "nray/sdf.hpp"

namespace nray {

struct PaResult {
  PowerSplit split;
  bool converged = false;
  int iterations = 0;
};

/// Best-relay outage probability as a function of the power ratio
/// rho = P1/PT, with P2 = (1 - rho) PT.
double pa_objective(double rho, const NetworkConfig& cfg);

/// Damped successive approximation of the stationarity map
///   rho <- [S2/S1 + 1]^-1,
///   S1 = sum_i Q2_i theta_i1 u1_i^m1 e^-u1_i,  S2 = sum_i Q1_i theta_i2 ...
/// where Q_j are the per-hop success probabilities and
/// theta_ij = 1 / (n_ij Gamma(m_ij) (1 - Q1_i Q2_i)).
PaResult pa_fixed_point(const NetworkConfig& cfg, double tol = 1e-9,
                        int max_iter = 500);

/// Ground-truth minimizer of pa_objective by golden-section search.
PowerSplit pa_oracle(const NetworkConfig& cfg);

/// Severity-only closed form: P1 = PT [sum(m2/n2)/sum(m1/n1) + 1]^-1.
PowerSplit pa_asymptotic(const NetworkConfig& cfg);

/// Equal split P1 = P2 = PT/2.
PowerSplit epa(const NetworkConfig& cfg);

/// Outage of the (otherwise i.i.d.) network with channel powers replaced by
/// path loss at normalized source-relay distance d1: lambda1 = d1^-sigma,
/// lambda2 = (1 - d1)^-sigma.
double outage_vs_distance(double d1, const NetworkConfig& cfg,
                          double pathloss_exp);

}  // namespace nray
