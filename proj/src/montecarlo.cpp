#include "nray/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace nray {
namespace {

constexpr std::uint64_t kBlockSize = 1u << 16;

struct HopSampler {
  int n = 1;
  double gbar = 1.0;     // lambda * p / noise
  double m = 0.0;        // fitted shape
  double inv_beta = 0.0; // fitted scale of gamma^{1/n}

  double sample_snr(Rng& rng, ChannelModel model) const {
    if (model == ChannelModel::fitted) {
      double y = rng.gamma(m) * inv_beta;
      return std::pow(y, static_cast<double>(n));
    }
    double prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= rng.exponential();
    return gbar * prod;
  }

  double sample_root_snr(Rng& rng, ChannelModel model) const {
    if (model == ChannelModel::fitted) return rng.gamma(m) * inv_beta;
    double prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= rng.exponential();
    return std::pow(gbar * prod, 1.0 / n);
  }
};

HopSampler make_sampler(const LinkSpec& link, double p, double noise) {
  HopSampler s;
  s.n = link.fading.n;
  s.gbar = link.lambda * p / noise;
  s.m = link.fading.m;
  s.inv_beta = 1.0 / snr_rate_beta(link.fading, s.gbar);
  return s;
}

}  // namespace

McEstimate mc_run(const BlockKernel& kernel, const McConfig& mc,
                  std::uint64_t point_index) {
  if (mc.trials < 1) throw std::invalid_argument("mc_run: trials < 1");
  const std::uint64_t blocks = (mc.trials + kBlockSize - 1) / kBlockSize;
  int workers = mc.workers > 0
                    ? mc.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> hits{0};
  auto work = [&] {
    for (;;) {
      std::uint64_t b = next_block.fetch_add(1);
      if (b >= blocks) return;
      std::uint64_t lo = b * kBlockSize;
      std::uint64_t count = std::min(kBlockSize, mc.trials - lo);
      Rng rng(derive_stream(mc.base_seed, point_index, b));
      hits.fetch_add(kernel(rng, count));
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  double p = static_cast<double>(hits.load()) / static_cast<double>(mc.trials);
  double se = std::sqrt(std::max(p * (1.0 - p), 0.0) /
                        static_cast<double>(mc.trials));
  return {p, se, mc.trials};
}

BlockKernel sdf_trial_kernel(const NetworkConfig& cfg, const PowerSplit& power,
                             ChannelModel model) {
  std::vector<std::pair<HopSampler, HopSampler>> hops;
  hops.reserve(cfg.relays.size());
  for (const auto& relay : cfg.relays)
    hops.push_back({make_sampler(relay.first, power.p1, cfg.noise_power),
                    make_sampler(relay.second, power.p2, cfg.noise_power)});
  double gamma_o = cfg.gamma_threshold;
  return [hops, gamma_o, model](Rng& rng, std::uint64_t trials) {
    std::uint64_t outages = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      double best = -1.0;
      for (const auto& [h1, h2] : hops) {
        double g1 = h1.sample_snr(rng, model);
        double g2 = h2.sample_snr(rng, model);
        if (g1 >= gamma_o && g2 > best) best = g2;
      }
      if (best < gamma_o) ++outages;
    }
    return outages;
  };
}

BlockKernel saf_trial_kernel(const NetworkConfig& cfg, const PowerSplit& power,
                             ChannelModel model) {
  std::vector<std::pair<HopSampler, HopSampler>> hops;
  hops.reserve(cfg.relays.size());
  for (const auto& relay : cfg.relays)
    hops.push_back({make_sampler(relay.first, power.p1, cfg.noise_power),
                    make_sampler(relay.second, power.p2, cfg.noise_power)});
  // effective SNR threshold in the root domain; all relays share the order
  int n = cfg.relays.front().first.fading.n;
  double z_threshold = std::pow(cfg.gamma_threshold, 1.0 / n);
  return [hops, z_threshold, model](Rng& rng, std::uint64_t trials) {
    std::uint64_t outages = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      double best = 0.0;
      for (const auto& [h1, h2] : hops) {
        double z1 = h1.sample_root_snr(rng, model);
        double z2 = h2.sample_root_snr(rng, model);
        double zh = (z1 + z2) > 0.0 ? z1 * z2 / (z1 + z2) : 0.0;
        if (zh > best) best = zh;
      }
      if (best < z_threshold) ++outages;
    }
    return outages;
  };
}

McEstimate mc_outage_sdf(const NetworkConfig& cfg, const PowerSplit& power,
                         const McConfig& mc, std::uint64_t point_index,
                         ChannelModel model) {
  return mc_run(sdf_trial_kernel(cfg, power, model), mc, point_index);
}

McEstimate mc_outage_saf(const NetworkConfig& cfg, const PowerSplit& power,
                         const McConfig& mc, std::uint64_t point_index,
                         ChannelModel model) {
  return mc_run(saf_trial_kernel(cfg, power, model), mc, point_index);
}

std::vector<OutagePoint> mc_curve(
    std::span<const double> snr_db_grid,
    const std::function<BlockKernel(double snr_db)>& make_kernel,
    const McConfig& mc) {
  std::vector<OutagePoint> curve;
  curve.reserve(snr_db_grid.size());
  for (std::size_t i = 0; i < snr_db_grid.size(); ++i) {
    McEstimate est = mc_run(make_kernel(snr_db_grid[i]), mc, i);
    curve.push_back({snr_db_grid[i], est.value});
  }
  return curve;
}

}  // namespace nray
