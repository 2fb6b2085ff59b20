#include "nray/saf.hpp"

#include <cmath>
#include <stdexcept>

#include "nray/quadrature.hpp"
#include "nray/special.hpp"

namespace nray {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// The U(1/2-K, 1-K, x) calls below degenerate when K is an integer; the
// fitted m(n) never is, but synthetic shapes (e.g. n_alpha = 1) are nudged
// off the integer by an amount far below every stated tolerance.
double dodge_integer_shape(double k) {
  double frac = std::fabs(k - std::nearbyint(k));
  return frac < 1e-9 ? k + 1.5e-7 : k;
}

double root_domain_pdf(double z, double shape, double beta) {
  // density of Z = Y/2 where Y is the harmonic mean of two Gamma(shape, beta)
  if (z <= 0.0) return 0.0;
  double x = 4.0 * beta * z;
  double lg = std::log(2.0 * kSqrtPi) + shape * std::log(beta) -
              2.0 * ln_gamma(shape) + (shape - 1.0) * std::log(z) - x;
  return std::exp(lg) * tricomi_u(0.5 - shape, 1.0 - shape, x);
}

void require_balanced_relay(const std::pair<LinkSpec, LinkSpec>& relay,
                            const PowerSplit& power) {
  const FadingParams& a = relay.first.fading;
  const FadingParams& b = relay.second.fading;
  if (a.n != b.n || a.m != b.m || a.omega != b.omega ||
      relay.first.lambda != relay.second.lambda || power.p1 != power.p2)
    throw std::invalid_argument(
        "saf: both hops of a relay must share cascade order, channel power "
        "and transmit power");
}

}  // namespace

HarmonicSnrParams harmonic_params(const FadingParams& fp, double avg_snr) {
  HarmonicSnrParams p;
  p.n = fp.n;
  p.m = fp.m;
  p.omega = fp.omega;
  p.avg_snr = avg_snr;
  p.beta_h = snr_rate_beta(fp, avg_snr);
  return p;
}

double harmonic_snr_bound(double g1, double g2, int n) {
  if (g1 < 0.0 || g2 < 0.0)
    throw std::domain_error("harmonic_snr_bound: negative SNR");
  if (g1 == 0.0 && g2 == 0.0) return 0.0;  // limit along either axis
  double z1 = std::pow(g1, 1.0 / n);
  double z2 = std::pow(g2, 1.0 / n);
  return z1 * z2 / (z1 + z2);
}

double harmonic_pdf(double y, double n_alpha, double beta) {
  if (y < 0.0) throw std::domain_error("harmonic_pdf: y < 0");
  if (!(n_alpha > 0.0) || !(beta > 0.0))
    throw std::domain_error("harmonic_pdf: shape and rate must be positive");
  if (y == 0.0) return 0.0;
  double k = dodge_integer_shape(n_alpha);
  double x = 2.0 * beta * y;
  double lg = std::log(kSqrtPi) + k * std::log(beta) - 2.0 * ln_gamma(k) +
              (k - 1.0) * std::log(0.5 * y) - x;
  return std::exp(lg) * tricomi_u(0.5 - k, 1.0 - k, x);
}

double harmonic_moment(int k, double n_alpha, double beta) {
  if (k < 0) throw std::domain_error("harmonic_moment: negative order");
  double K = n_alpha;
  double lg = std::log(kSqrtPi) - k * std::log(beta) + ln_gamma(K + k) +
              ln_gamma(2.0 * K + k) - (2.0 * K + k - 1.0) * std::log(2.0) -
              2.0 * ln_gamma(K) - ln_gamma(K + k + 0.5);
  return std::exp(lg);
}

double saf_snr_pdf(double gamma, const HarmonicSnrParams& p) {
  if (gamma < 0.0) throw std::domain_error("saf_snr_pdf: gamma < 0");
  if (gamma == 0.0) return 0.0;
  double m = dodge_integer_shape(p.m);
  double x = 4.0 * p.beta_h * std::pow(gamma, 1.0 / p.n);
  double lg = std::log(2.0 * kSqrtPi) + m * std::log(p.beta_h) -
              std::log(static_cast<double>(p.n)) - 2.0 * ln_gamma(m) +
              (m / p.n - 1.0) * std::log(gamma) - x;
  return std::exp(lg) * tricomi_u(0.5 - m, 1.0 - m, x);
}

double saf_snr_cdf(double gamma, const HarmonicSnrParams& p) {
  if (gamma < 0.0) throw std::domain_error("saf_snr_cdf: gamma < 0");
  if (gamma == 0.0) return 0.0;
  double m = dodge_integer_shape(p.m);
  double zmax = std::pow(gamma, 1.0 / p.n);
  QuadResult q = integrate(
      [&](double z) { return root_domain_pdf(z, m, p.beta_h); }, 0.0, zmax,
      1e-11, 1e-300);
  if (!q.converged)
    throw no_convergence("saf_snr_cdf: quadrature tolerance not met");
  return std::min(q.value, 1.0);
}

double saf_avg_snr(const HarmonicSnrParams& p) {
  double m = p.m;
  int n = p.n;
  return pochhammer(m, n) * pochhammer(2.0 * m, n) /
         (pochhammer(m + 0.5, n) * std::pow(4.0 * p.beta_h, n));
}

double outage_saf(const NetworkConfig& cfg, const PowerSplit& power) {
  if (cfg.relays.empty()) throw std::invalid_argument("empty relay list");
  double log_p = 0.0;
  for (const auto& relay : cfg.relays) {
    require_balanced_relay(relay, power);
    double gbar = relay.first.lambda * power.p1 / cfg.noise_power;
    HarmonicSnrParams p = harmonic_params(relay.first.fading, gbar);
    double f = saf_snr_cdf(cfg.gamma_threshold, p);
    if (f <= 0.0) return 0.0;
    log_p += std::log(f);
  }
  return std::exp(log_p);
}

double outage_saf_asymptotic(const NetworkConfig& cfg,
                             const PowerSplit& power) {
  if (cfg.relays.empty()) throw std::invalid_argument("empty relay list");
  for (const auto& relay : cfg.relays) require_balanced_relay(relay, power);
  const LinkSpec& link = cfg.relays.front().first;
  const FadingParams& fp = link.fading;
  double snr = power.p1 / cfg.noise_power;
  double lg = (5.0 * fp.m - 1.0) * std::log(2.0) +
              fp.m * std::log(fp.m / fp.omega) - std::log(fp.m) -
              (fp.m / fp.n) * std::log(link.lambda) - ln_gamma(fp.m) +
              (fp.m / fp.n) * std::log(cfg.gamma_threshold / snr);
  return std::exp(cfg.relay_count() * lg);
}

}  // namespace nray
