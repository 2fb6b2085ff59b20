#include "nray/sdf.hpp"

#include <cmath>
#include <stdexcept>

#include "nray/order_stats.hpp"
#include "nray/special.hpp"

namespace nray {
namespace {

struct HopFailure {
  double eps1;  // P(hop-1 SNR < gamma_o)
  double eps2;  // P(hop-2 SNR < gamma_o)
};

HopFailure hop_failures(const std::pair<LinkSpec, LinkSpec>& relay, double p1,
                        double p2, double noise, double gamma_o) {
  const LinkSpec& a = relay.first;
  const LinkSpec& b = relay.second;
  double g1 = a.lambda * p1 / noise;
  double g2 = b.lambda * p2 / noise;
  double u1 = snr_rate_beta(a.fading, g1) * std::pow(gamma_o, 1.0 / a.fading.n);
  double u2 = snr_rate_beta(b.fading, g2) * std::pow(gamma_o, 1.0 / b.fading.n);
  return {reg_lower_gamma(a.fading.m, u1), reg_lower_gamma(b.fading.m, u2)};
}

void require_iid(const NetworkConfig& cfg, const PowerSplit& power,
                 const char* who) {
  if (cfg.relays.empty()) throw std::invalid_argument("empty relay list");
  const LinkSpec& ref = cfg.relays.front().first;
  auto same = [&](const LinkSpec& l) {
    return l.fading.n == ref.fading.n && l.fading.m == ref.fading.m &&
           l.fading.omega == ref.fading.omega && l.lambda == ref.lambda;
  };
  bool ok = power.p1 == power.p2;
  for (const auto& r : cfg.relays) ok = ok && same(r.first) && same(r.second);
  if (!ok)
    throw std::invalid_argument(std::string(who) +
                                ": requires i.i.d. hops and equal powers");
}

double asymptotic_constant(const FadingParams& fp, double lambda) {
  // 2^{m+1} (m/Omega)^m / (m lambda^{m/n} Gamma(m)), in log space
  double lg = (fp.m + 1.0) * std::log(2.0) +
              fp.m * std::log(fp.m / fp.omega) - std::log(fp.m) -
              (fp.m / fp.n) * std::log(lambda) - ln_gamma(fp.m);
  return lg;  // callers keep it logarithmic
}

}  // namespace

NetworkConfig make_iid_network(int relay_count, int n, double gamma_o,
                               double lambda1, double lambda2, double noise) {
  if (relay_count < 1) throw std::invalid_argument("relay_count < 1");
  NetworkConfig cfg;
  LinkSpec hop1{fading_params_from_order(n), lambda1};
  LinkSpec hop2{fading_params_from_order(n), lambda2};
  cfg.relays.assign(relay_count, {hop1, hop2});
  cfg.noise_power = noise;
  cfg.gamma_threshold = gamma_o;
  return cfg;
}

double e2e_link_cdf(double gamma, const std::pair<LinkSpec, LinkSpec>& pair,
                    double p1, double p2, double noise, double gamma_o) {
  double g1 = pair.first.lambda * p1 / noise;
  double g2 = pair.second.lambda * p2 / noise;
  double f1 = approx_snr_cdf(gamma_o, pair.first, g1);
  double f2 = approx_snr_cdf(gamma, pair.second, g2);
  return f1 + (1.0 - f1) * f2;
}

double outage_sdf_best(const NetworkConfig& cfg, const PowerSplit& power) {
  if (cfg.relays.empty()) throw std::invalid_argument("empty relay list");
  double log_p = 0.0;
  for (const auto& relay : cfg.relays) {
    HopFailure h = hop_failures(relay, power.p1, power.p2, cfg.noise_power,
                                cfg.gamma_threshold);
    double p_relay = h.eps1 + h.eps2 - h.eps1 * h.eps2;
    if (p_relay <= 0.0) return 0.0;
    log_p += std::log(p_relay);
  }
  return std::exp(log_p);
}

double outage_sdf_ith(const NetworkConfig& cfg, const PowerSplit& power,
                      int i) {
  const int n = cfg.relay_count();
  if (i < 1 || i > n) throw std::out_of_range("outage_sdf_ith: rank");
  Eigen::VectorXd f(n);
  for (int k = 0; k < n; ++k) {
    HopFailure h = hop_failures(cfg.relays[k], power.p1, power.p2,
                                cfg.noise_power, cfg.gamma_threshold);
    f[k] = h.eps1 + h.eps2 - h.eps1 * h.eps2;
  }
  return cdf_ith_order(f, i);
}

double outage_sdf_upper_bound(const NetworkConfig& cfg,
                              const PowerSplit& power) {
  require_iid(cfg, power, "outage_sdf_upper_bound");
  HopFailure h = hop_failures(cfg.relays.front(), power.p1, power.p2,
                              cfg.noise_power, cfg.gamma_threshold);
  if (h.eps2 <= 0.0) return 0.0;
  return std::exp(cfg.relay_count() * std::log(2.0 * h.eps2));
}

double outage_sdf_asymptotic(const NetworkConfig& cfg,
                             const PowerSplit& power) {
  require_iid(cfg, power, "outage_sdf_asymptotic");
  const LinkSpec& link = cfg.relays.front().first;
  const FadingParams& fp = link.fading;
  double snr = power.p1 / cfg.noise_power;
  int n_relays = cfg.relay_count();
  double lg = asymptotic_constant(fp, link.lambda) +
              (fp.m / fp.n) * std::log(cfg.gamma_threshold / snr);
  return std::exp(n_relays * lg);
}

double diversity_order_empirical(std::span<const OutagePoint> curve) {
  if (curve.size() < 2)
    throw std::invalid_argument("diversity_order_empirical: need >= 2 points");
  const OutagePoint& a = curve[curve.size() - 2];
  const OutagePoint& b = curve[curve.size() - 1];
  if (!(b.snr_db > a.snr_db) || !(a.p_out > 0.0) || !(b.p_out > 0.0))
    throw std::invalid_argument("diversity_order_empirical: degenerate curve");
  double dlog_snr = (b.snr_db - a.snr_db) / 10.0;  // log10 of linear SNR
  return -(std::log10(b.p_out) - std::log10(a.p_out)) / dlog_snr;
}

double coding_gain(const NetworkConfig& cfg) {
  if (cfg.relays.empty()) throw std::invalid_argument("empty relay list");
  const LinkSpec& link = cfg.relays.front().first;
  const FadingParams& fp = link.fading;
  return std::exp(-(fp.n / fp.m) * asymptotic_constant(fp, link.lambda));
}

}  // namespace nray
