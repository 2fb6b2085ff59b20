#include "nray/power_alloc.hpp"

#include <cmath>
#include <stdexcept>

#include "nray/special.hpp"

namespace nray {
namespace {

struct HopTerm {
  double q;     // success probability Q(m, u)
  double grad;  // u^m e^-u / (n Gamma(m))
};

HopTerm hop_term(const LinkSpec& link, double p, double noise, double gamma_o) {
  const FadingParams& fp = link.fading;
  double gbar = link.lambda * p / noise;
  double u = snr_rate_beta(fp, gbar) * std::pow(gamma_o, 1.0 / fp.n);
  double q = reg_upper_gamma(fp.m, u);
  double g = std::exp(fp.m * std::log(u) - u - std::log(static_cast<double>(fp.n)) -
                      ln_gamma(fp.m));
  return {q, g};
}

double stationarity_map(double rho, const NetworkConfig& cfg) {
  double p1 = rho * cfg.total_power;
  double p2 = (1.0 - rho) * cfg.total_power;
  double s1 = 0.0, s2 = 0.0;
  for (const auto& relay : cfg.relays) {
    HopTerm h1 = hop_term(relay.first, p1, cfg.noise_power, cfg.gamma_threshold);
    HopTerm h2 = hop_term(relay.second, p2, cfg.noise_power, cfg.gamma_threshold);
    double coupling = 1.0 - h1.q * h2.q;
    if (coupling <= 0.0) coupling = 1e-300;
    s1 += h2.q * h1.grad / coupling;
    s2 += h1.q * h2.grad / coupling;
  }
  if (s1 <= 0.0) return 0.5;  // both hops saturated; map undefined
  return 1.0 / (s2 / s1 + 1.0);
}

}  // namespace

double pa_objective(double rho, const NetworkConfig& cfg) {
  if (!(rho > 0.0) || !(rho < 1.0))
    throw std::domain_error("pa_objective: rho must lie in (0,1)");
  PowerSplit split = PowerSplit::from_ratio(rho, cfg.total_power);
  return outage_sdf_best(cfg, split);
}

PaResult pa_fixed_point(const NetworkConfig& cfg, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::domain_error("pa_fixed_point: tol <= 0");
  const double damping = 0.5;
  double rho = 0.5;
  for (int k = 1; k <= max_iter; ++k) {
    double next = (1.0 - damping) * rho + damping * stationarity_map(rho, cfg);
    if (std::fabs(next - rho) < tol)
      return {PowerSplit::from_ratio(next, cfg.total_power), true, k};
    rho = next;
  }
  return {PowerSplit::from_ratio(rho, cfg.total_power), false, max_iter};
}

PowerSplit pa_oracle(const NetworkConfig& cfg) {
  // golden-section to 1e-6 on (0,1)
  const double inv_phi = 0.6180339887498949;
  double a = 1e-9, b = 1.0 - 1e-9;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = pa_objective(x1, cfg);
  double f2 = pa_objective(x2, cfg);
  while (b - a > 1e-6) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = pa_objective(x1, cfg);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = pa_objective(x2, cfg);
    }
  }
  return PowerSplit::from_ratio(0.5 * (a + b), cfg.total_power);
}

PowerSplit pa_asymptotic(const NetworkConfig& cfg) {
  if (cfg.relays.empty()) throw std::invalid_argument("empty relay list");
  double s1 = 0.0, s2 = 0.0;
  for (const auto& relay : cfg.relays) {
    s1 += relay.first.fading.m / relay.first.fading.n;
    s2 += relay.second.fading.m / relay.second.fading.n;
  }
  double rho = 1.0 / (s2 / s1 + 1.0);
  return PowerSplit::from_ratio(rho, cfg.total_power);
}

PowerSplit epa(const NetworkConfig& cfg) {
  return PowerSplit::from_ratio(0.5, cfg.total_power);
}

double outage_vs_distance(double d1, const NetworkConfig& cfg,
                          double pathloss_exp) {
  if (!(d1 > 0.0) || !(d1 < 1.0))
    throw std::domain_error("outage_vs_distance: d1 must lie in (0,1)");
  if (!(pathloss_exp >= 0.0))
    throw std::domain_error("outage_vs_distance: negative path loss exponent");
  NetworkConfig scaled = cfg;
  for (auto& relay : scaled.relays) {
    relay.first.lambda = std::pow(d1, -pathloss_exp);
    relay.second.lambda = std::pow(1.0 - d1, -pathloss_exp);
  }
  return outage_sdf_best(scaled, epa(scaled));
}

}  // namespace nray
