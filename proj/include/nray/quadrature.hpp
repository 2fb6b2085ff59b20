#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace nray {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair (QUADPACK constants).
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <typename F>
inline void gk15(const F& f, double a, double b, double& val, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fc = f(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    double f1 = f(c - x), f2 = f(c + x);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  val = resk * h;
  err = std::fabs((resk - resg) * h);
}

template <typename F>
inline void adapt(const F& f, double a, double b, double tol_abs, int depth,
                  QuadResult& out) {
  double v, e;
  gk15(f, a, b, v, e);
  if (e <= tol_abs || depth >= 48) {
    out.value += v;
    out.error += e;
    if (depth >= 48 && e > tol_abs) out.converged = false;
    return;
  }
  double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol_abs, depth + 1, out);
  adapt(f, m, b, 0.5 * tol_abs, depth + 1, out);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod on [a,b].
template <typename F>
QuadResult integrate(const F& f, double a, double b, double rel_tol = 1e-10,
                     double abs_tol = 1e-14) {
  QuadResult out;
  out.converged = true;
  if (a == b) return out;
  double v0, e0;
  detail::gk15(f, a, b, v0, e0);
  double tol = std::max(abs_tol, rel_tol * std::fabs(v0));
  out.value = 0.0;
  out.error = 0.0;
  detail::adapt(f, a, b, tol, 0, out);
  if (out.error > std::max(abs_tol, 10.0 * rel_tol * std::fabs(out.value)) &&
      out.error > abs_tol)
    out.converged = std::fabs(out.value) == 0.0 ? out.converged : false;
  return out;
}

/// Integral over [a, inf) via t -> a + u/(1-u) on (0,1).
template <typename F>
QuadResult integrate_to_inf(const F& f, double a, double rel_tol = 1e-10,
                            double abs_tol = 1e-14) {
  auto g = [&](double u) {
    double one_m = 1.0 - u;
    double t = a + u / one_m;
    return f(t) / (one_m * one_m);
  };
  return integrate(g, 0.0, 1.0, rel_tol, abs_tol);
}

}  // namespace nray
