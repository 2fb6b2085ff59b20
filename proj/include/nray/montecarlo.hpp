#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nray/rng.hpp"
#include "nray/sdf.hpp"

namespace nray {

struct McConfig {
  std::uint64_t trials = 10'000'000;
  std::uint64_t base_seed = 1;
  int workers = 0;  // 0: hardware concurrency
};

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
};

/// Which per-hop SNR law trials draw from. `product_rayleigh` is the physical
/// channel (product of unit-power Rayleigh factors); `fitted` draws from the
/// gamma-type approximation itself, which isolates the selection/combining
/// algebra from channel-model error in validation runs.
enum class ChannelModel { product_rayleigh, fitted };

/// Counts outage events over blocks of trials; must consume only `rng`.
using BlockKernel = std::function<std::uint64_t(Rng&, std::uint64_t)>;

/// Deterministic parallel driver: trials are partitioned into fixed blocks,
/// each block gets the stream derive_stream(base_seed, point_index, block),
/// and counts are summed exactly, so the estimate is independent of the
/// worker count and schedule.
McEstimate mc_run(const BlockKernel& kernel, const McConfig& mc,
                  std::uint64_t point_index = 0);

/// Decode-set protocol: relays with hop-1 SNR >= gamma_o form the set; the
/// best hop-2 SNR among them is selected; outage if the set is empty or the
/// selected SNR is below gamma_o.
McEstimate mc_outage_sdf(const NetworkConfig& cfg, const PowerSplit& power,
                         const McConfig& mc, std::uint64_t point_index = 0,
                         ChannelModel model = ChannelModel::product_rayleigh);

/// Max over relays of the harmonic effective SNR; outage if its n-th power
/// falls below gamma_o.
McEstimate mc_outage_saf(const NetworkConfig& cfg, const PowerSplit& power,
                         const McConfig& mc, std::uint64_t point_index = 0,
                         ChannelModel model = ChannelModel::product_rayleigh);

/// One estimate per SNR grid point with per-point derived seeds.
std::vector<OutagePoint> mc_curve(
    std::span<const double> snr_db_grid,
    const std::function<BlockKernel(double snr_db)>& make_kernel,
    const McConfig& mc);

/// Trial kernels, exposed for custom protocols in tests and tools.
BlockKernel sdf_trial_kernel(const NetworkConfig& cfg, const PowerSplit& power,
                             ChannelModel model);
BlockKernel saf_trial_kernel(const NetworkConfig& cfg, const PowerSplit& power,
                             ChannelModel model);

}  // namespace nray
