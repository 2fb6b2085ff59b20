#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nray {

/// One Naive Bayes class: cascade order, amplitude scale, prior.
struct ClassModel {
  int n = 1;
  double sigma2 = 0.5;
  double prior = 1.0;
};

/// Classes n = 1..6 with sigma^2 = 2^-n and uniform priors.
std::vector<ClassModel> default_class_models();

/// Log of the class-conditional amplitude density
///   f(h) = 2 (m/Om)^m h^{2a-1} / (n Gamma(m) sigma^{2a}) e^{-beta h^{2/n}},
/// a = m/n, beta = (m/Om) sigma^{-2/n}. Returns -inf at h = 0.
double class_log_likelihood(double h, const ClassModel& model);

/// ML scale estimate sigma^2 = [sum h_t^{2/n} / (2K Gamma^n(1/n + 1))]^n.
double sigma2_ml_estimate(std::span<const double> samples, int n);

struct Classification {
  int label = 0;
  std::vector<double> log_scores;  // aligned with the model list
};

/// MAP label: argmax of log prior + sum of log likelihoods.
/// Ties break toward the smaller cascade order.
Classification map_classify(std::span<const double> seq,
                            std::span<const ClassModel> models);

/// Kernel density estimates of the amplitude density at fixed probe points,
/// one row per class, built from K sampled amplitudes per class.
struct TrainingTable {
  struct Row {
    int n = 0;
    double sigma2 = 0.0;
    std::vector<double> density;
  };
  std::vector<double> probe_points;
  std::vector<Row> rows;

  std::string to_csv() const;
};

inline const std::vector<double>& table_probe_points() {
  static const std::vector<double> pts{0.12, 0.24, 0.54, 0.78, 1.0, 1.23};
  return pts;
}

TrainingTable build_empirical_table(std::size_t K,
                                    std::span<const ClassModel> classes,
                                    std::span<const double> probe_points,
                                    std::uint64_t seed);

}  // namespace nray
