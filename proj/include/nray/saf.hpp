#pragma once

#include "nray/channel.hpp"
#include "nray/sdf.hpp"

namespace nray {

/// Parameters of the harmonic end-to-end SNR law for one relay whose two hops
/// share the cascade order n and average SNR avg_snr. beta_h is the Gamma rate
/// of the root-domain hop variable gamma^{1/n}.
struct HarmonicSnrParams {
  int n = 1;
  double m = 0.0;
  double omega = 0.0;
  double avg_snr = 0.0;
  double beta_h = 0.0;  // 2m / (omega * avg_snr^{1/n})
};

HarmonicSnrParams harmonic_params(const FadingParams& fp, double avg_snr);

/// Effective end-to-end SNR bound in the root domain:
///   g1^{1/n} g2^{1/n} / (g1^{1/n} + g2^{1/n});  0 at (0,0) by continuity.
double harmonic_snr_bound(double g1, double g2, int n);

/// Density of the harmonic mean of two i.i.d. Gamma(n_alpha, beta) variables.
double harmonic_pdf(double y, double n_alpha, double beta);

/// k-th moment of that harmonic mean:
///   sqrt(pi) beta^-k G(K+k) G(2K+k) / (2^{2K+k-1} G(K)^2 G(K+k+1/2)).
double harmonic_moment(int k, double n_alpha, double beta);

/// Density of the per-relay effective SNR gamma = (harmonic of roots)^n.
double saf_snr_pdf(double gamma, const HarmonicSnrParams& p);

/// CDF by adaptive quadrature of the density in the root domain.
double saf_snr_cdf(double gamma, const HarmonicSnrParams& p);

/// Closed-form mean of the effective SNR:
///   (m)_n (2m)_n / ((m + 1/2)_n (4 beta_h)^n).
double saf_avg_snr(const HarmonicSnrParams& p);

/// Outage with best-relay selection: product of per-relay saf_snr_cdf values.
double outage_saf(const NetworkConfig& cfg, const PowerSplit& power);

/// High-SNR expansion
///   [2^{5m-1} (m/Omega)^m / (m lambda^{m/n} Gamma(m))]^N (gamma_o/snr)^{mN/n}.
double outage_saf_asymptotic(const NetworkConfig& cfg, const PowerSplit& power);

}  // namespace nray
