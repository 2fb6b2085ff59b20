#include "nray/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "nray/channel.hpp"
#include "nray/special.hpp"

namespace nray {
namespace {

// class scale sigma^2 is the product of the per-stage variances, so an even
// split uses sigma_k^2 = (sigma^2)^{1/n} per stage
double per_stage_variance(const ClassModel& model) {
  return std::pow(model.sigma2, 1.0 / model.n);
}

}  // namespace

std::vector<ClassModel> default_class_models() {
  std::vector<ClassModel> models;
  for (int n = 1; n <= 6; ++n)
    models.push_back({n, std::exp2(static_cast<double>(-n)), 1.0 / 6.0});
  return models;
}

double class_log_likelihood(double h, const ClassModel& model) {
  if (h < 0.0) throw std::domain_error("class_log_likelihood: h < 0");
  FadingParams fp = fading_params_from_order(model.n);
  double alpha = fp.m / fp.n;
  if (h == 0.0) return -std::numeric_limits<double>::infinity();
  double beta = (fp.m / fp.omega) * std::pow(model.sigma2, -1.0 / fp.n);
  return std::log(2.0) + fp.m * std::log(fp.m / fp.omega) +
         (2.0 * alpha - 1.0) * std::log(h) -
         std::log(static_cast<double>(fp.n)) - ln_gamma(fp.m) -
         alpha * std::log(model.sigma2) - beta * std::pow(h, 2.0 / fp.n);
}

double sigma2_ml_estimate(std::span<const double> samples, int n) {
  if (samples.empty())
    throw std::invalid_argument("sigma2_ml_estimate: empty sample set");
  if (n < 1) throw std::domain_error("sigma2_ml_estimate: n < 1");
  double sum = 0.0;
  for (double h : samples) {
    if (h < 0.0) throw std::domain_error("sigma2_ml_estimate: negative sample");
    sum += std::pow(h, 2.0 / n);
  }
  if (sum == 0.0)
    throw std::domain_error("sigma2_ml_estimate: all samples are zero");
  double k = static_cast<double>(samples.size());
  double denom = 2.0 * k * std::exp(n * ln_gamma(1.0 / n + 1.0));
  return std::pow(sum / denom, static_cast<double>(n));
}

Classification map_classify(std::span<const double> seq,
                            std::span<const ClassModel> models) {
  if (seq.empty()) throw std::invalid_argument("map_classify: empty sequence");
  if (models.empty()) throw std::invalid_argument("map_classify: no models");

  Classification out;
  out.log_scores.reserve(models.size());
  for (const ClassModel& model : models) {
    double score = std::log(model.prior);
    for (double h : seq) score += class_log_likelihood(h, model);
    out.log_scores.push_back(score);
  }
  int best = -1;
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (!std::isfinite(out.log_scores[i])) continue;
    if (best < 0 || out.log_scores[i] > out.log_scores[best] ||
        (out.log_scores[i] == out.log_scores[best] &&
         models[i].n < models[best].n))
      best = static_cast<int>(i);
  }
  if (best < 0)
    throw std::runtime_error("map_classify: every class has -inf score");
  out.label = models[best].n;
  return out;
}

std::string TrainingTable::to_csv() const {
  std::string csv = "n,sigma2";
  char buf[64];
  for (double p : probe_points) {
    std::snprintf(buf, sizeof(buf), ",h_%.2f", p);
    csv += buf;
  }
  csv += '\n';
  for (const Row& row : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%.6f", row.n, row.sigma2);
    csv += buf;
    for (double d : row.density) {
      std::snprintf(buf, sizeof(buf), ",%.6f", d);
      csv += buf;
    }
    csv += '\n';
  }
  return csv;
}

TrainingTable build_empirical_table(std::size_t K,
                                    std::span<const ClassModel> classes,
                                    std::span<const double> probe_points,
                                    std::uint64_t seed) {
  if (K < 10000)
    throw std::invalid_argument("build_empirical_table: K must be >= 1e4");
  TrainingTable table;
  table.probe_points.assign(probe_points.begin(), probe_points.end());

  std::uint64_t class_index = 0;
  for (const ClassModel& model : classes) {
    Rng rng(derive_stream(seed, class_index++, 0));
    std::vector<double> h(K);
    double s2_stage = per_stage_variance(model);
    for (std::size_t i = 0; i < K; ++i)
      h[i] = sample_amplitude(model.n, s2_stage, rng);

    // Silverman bandwidth for a Gaussian kernel
    double mean = 0.0;
    for (double v : h) mean += v;
    mean /= static_cast<double>(K);
    double var = 0.0;
    for (double v : h) var += (v - mean) * (v - mean);
    var /= static_cast<double>(K - 1);
    std::vector<double> sorted = h;
    std::sort(sorted.begin(), sorted.end());
    double iqr = sorted[static_cast<std::size_t>(0.75 * K)] -
                 sorted[static_cast<std::size_t>(0.25 * K)];
    double bw = 0.9 * std::min(std::sqrt(var), iqr / 1.34) *
                std::pow(static_cast<double>(K), -0.2);

    TrainingTable::Row row{model.n, model.sigma2, {}};
    const double norm = 1.0 / (K * bw * std::sqrt(2.0 * 3.141592653589793));
    for (double p : probe_points) {
      double acc = 0.0;
      for (double v : h) {
        double t = (p - v) / bw;
        if (std::fabs(t) < 8.0) acc += std::exp(-0.5 * t * t);
      }
      row.density.push_back(acc * norm);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace nray
