#pragma once

#include <stdexcept>

namespace nray {

/// Tuning knobs for series evaluation.
struct EvalOptions {
  double rel_tol = 1e-10;
  int max_terms = 500;
};

/// Thrown when a series or iteration fails to reach its tolerance.
class no_convergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// log Gamma(x) for x > 0.
double ln_gamma(double x);

/// Gamma(x) for real non-integer x (or positive x); reflection below zero.
double gamma_fn(double x);

/// 1/Gamma(x); zero at non-positive integers.
double reciprocal_gamma(double x);

/// Upper incomplete gamma Gamma(a,x) = int_x^inf t^{a-1} e^{-t} dt, a > 0, x >= 0.
double upper_inc_gamma(double a, double x);

/// Lower incomplete gamma gamma(a,x) = Gamma(a) - Gamma(a,x).
double lower_inc_gamma(double a, double x);

/// Regularized P(a,x) = gamma(a,x)/Gamma(a) and Q(a,x) = Gamma(a,x)/Gamma(a).
double reg_lower_gamma(double a, double x);
double reg_upper_gamma(double a, double x);

/// Kummer confluent hypergeometric M(a,b,x); b must not be a non-positive integer.
double kummer_m(double a, double b, double x, const EvalOptions& opt = {});

/// Tricomi confluent hypergeometric U(a,b,x) for x > 0 and non-integer b.
///
/// Three regimes: the Poincare expansion when its optimal truncation error is
/// negligible, the two-Kummer connection formula (compensated arithmetic) for
/// small x, and otherwise Taylor continuation of the defining ODE downward
/// from an asymptotic seed -- U is the dominant solution in that direction,
/// so the continuation is stable.
double tricomi_u(double a, double b, double x);

/// Pochhammer symbol (x)_k = Gamma(x+k)/Gamma(x), x > 0, x + k > 0.
double pochhammer(double x, double k);

}  // namespace nray
