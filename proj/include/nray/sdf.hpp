#pragma once

#include <span>
#include <utility>
#include <vector>

#include "nray/channel.hpp"

namespace nray {

/// Source and selected-relay transmit powers (linear).
struct PowerSplit {
  double p1 = 0.0;
  double p2 = 0.0;
  double rho() const { return p1 / (p1 + p2); }
  static PowerSplit from_ratio(double rho, double total) {
    return {rho * total, (1.0 - rho) * total};
  }
};

/// Dual-hop relay network under statistical CSI.
struct NetworkConfig {
  std::vector<std::pair<LinkSpec, LinkSpec>> relays;  // (source hop, dest hop)
  double noise_power = 1.0;
  double gamma_threshold = 3.0;  // gamma_o
  double total_power = 2.0;

  int relay_count() const { return static_cast<int>(relays.size()); }
  static double threshold_from_rate(double rate) {
    return std::exp2(2.0 * rate) - 1.0;
  }
};

/// N identical relays, both hops cascade order n, unit/2nd-hop channel powers.
NetworkConfig make_iid_network(int relay_count, int n, double gamma_o,
                               double lambda1 = 1.0, double lambda2 = 1.0,
                               double noise = 1.0);

struct OutagePoint {
  double snr_db = 0.0;
  double p_out = 0.0;
};

/// CDF of the effective end-to-end SNR through one relay path:
///   F(g) = F1(gamma_o) + [1 - F1(gamma_o)] F2(g).
double e2e_link_cdf(double gamma, const std::pair<LinkSpec, LinkSpec>& pair,
                    double p1, double p2, double noise, double gamma_o);

/// Outage with best-relay selection: product over relays of the per-relay
/// failure probability, accumulated in log space.
double outage_sdf_best(const NetworkConfig& cfg, const PowerSplit& power);

/// Outage when the rank-i relay (ascending, i = N best) is selected.
double outage_sdf_ith(const NetworkConfig& cfg, const PowerSplit& power, int i);

/// Upper bound (2 F_hop(gamma_o))^N for i.i.d. hops; may exceed 1 at low SNR.
double outage_sdf_upper_bound(const NetworkConfig& cfg, const PowerSplit& power);

/// High-SNR expansion of the bound:
///   [2^{m+1} (m/Omega)^m / (m lambda^{m/n} Gamma(m))]^N (gamma_o/snr)^{mN/n}.
double outage_sdf_asymptotic(const NetworkConfig& cfg, const PowerSplit& power);

/// Negative log-log slope through the last two points of an outage curve.
double diversity_order_empirical(std::span<const OutagePoint> curve);

/// Coding gain of the asymptote; independent of the relay count.
double coding_gain(const NetworkConfig& cfg);

}  // namespace nray
