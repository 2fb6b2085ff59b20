#pragma once

#include <span>
#include <vector>

#include "nray/rng.hpp"

namespace nray {

/// Fading shape of one cascaded-Rayleigh (n*Rayleigh) link.
///
/// m and omega are the severity/spread parameters of the gamma-type
/// approximation to the per-hop SNR distribution; they are functions of the
/// cascade order n alone.
struct FadingParams {
  int n = 1;
  double m = 0.0;
  double omega = 0.0;
};

/// m = 0.6102 n + 0.4263, omega = 0.8808 n^-0.9661 + 1.12; n in [1, 8].
FadingParams fading_params_from_order(int n);

/// One hop: fading shape plus mean channel power lambda = E|h|^2.
struct LinkSpec {
  FadingParams fading;
  double lambda = 1.0;
};

struct SnrSample {
  double gamma = 0.0;
};

/// Rate parameter of the approximate per-hop SNR law: 2m / (omega * gbar^{1/n}).
double snr_rate_beta(const FadingParams& fp, double avg_snr);

/// Approximate per-hop SNR density
///   f(g) = beta^m / (n Gamma(m)) g^{m/n - 1} exp(-beta g^{1/n}).
double approx_snr_pdf(double gamma, const LinkSpec& link, double avg_snr);

/// Matching CDF: F(g) = 1 - Gamma(m, beta g^{1/n}) / Gamma(m).
double approx_snr_cdf(double gamma, const LinkSpec& link, double avg_snr);

/// Amplitude |h| = prod_k |h_k| of n independent Rayleigh factors with common
/// per-stage variance sigma_k^2 = sigma2_stage (E|h_k|^2 = 2 sigma2_stage).
double sample_amplitude(int n, double sigma2_stage, Rng& rng);

/// Fraction of samples with gamma <= threshold.
double empirical_cdf(std::span<const SnrSample> samples, double gamma);

}  // namespace nray
