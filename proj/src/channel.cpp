#include "nray/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "nray/special.hpp"

namespace nray {

FadingParams fading_params_from_order(int n) {
  if (n < 1 || n > 8)
    throw std::out_of_range("fading_params_from_order: n must be in [1, 8]");
  FadingParams fp;
  fp.n = n;
  fp.m = 0.6102 * n + 0.4263;
  fp.omega = 0.8808 * std::pow(static_cast<double>(n), -0.9661) + 1.12;
  return fp;
}

double snr_rate_beta(const FadingParams& fp, double avg_snr) {
  if (!(avg_snr > 0.0)) throw std::domain_error("snr_rate_beta: avg_snr <= 0");
  return 2.0 * fp.m / (fp.omega * std::pow(avg_snr, 1.0 / fp.n));
}

double approx_snr_pdf(double gamma, const LinkSpec& link, double avg_snr) {
  if (gamma < 0.0) throw std::domain_error("approx_snr_pdf: gamma < 0");
  const FadingParams& fp = link.fading;
  double beta = snr_rate_beta(fp, avg_snr);
  double alpha = fp.m / fp.n;
  if (gamma == 0.0) return alpha > 1.0 ? 0.0 : (alpha == 1.0 ? beta : HUGE_VAL);
  double lg = fp.m * std::log(beta) - std::log(static_cast<double>(fp.n)) -
              ln_gamma(fp.m) + (alpha - 1.0) * std::log(gamma) -
              beta * std::pow(gamma, 1.0 / fp.n);
  return std::exp(lg);
}

double approx_snr_cdf(double gamma, const LinkSpec& link, double avg_snr) {
  if (gamma < 0.0) throw std::domain_error("approx_snr_cdf: gamma < 0");
  if (gamma == 0.0) return 0.0;
  const FadingParams& fp = link.fading;
  double beta = snr_rate_beta(fp, avg_snr);
  return reg_lower_gamma(fp.m, beta * std::pow(gamma, 1.0 / fp.n));
}

double sample_amplitude(int n, double sigma2_stage, Rng& rng) {
  if (n < 1) throw std::domain_error("sample_amplitude: n < 1");
  if (!(sigma2_stage > 0.0))
    throw std::domain_error("sample_amplitude: sigma2 <= 0");
  double sigma = std::sqrt(sigma2_stage);
  double h = 1.0;
  for (int k = 0; k < n; ++k) h *= rng.rayleigh(sigma);
  return h;
}

double empirical_cdf(std::span<const SnrSample> samples, double gamma) {
  if (samples.empty()) throw std::invalid_argument("empirical_cdf: no samples");
  std::size_t below = 0;
  for (const SnrSample& s : samples)
    if (s.gamma <= gamma) ++below;
  return static_cast<double>(below) / static_cast<double>(samples.size());
}

}  // namespace nray
