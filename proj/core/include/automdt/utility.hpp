#pragma once

#include "automdt/types.hpp"

namespace automdt {

/// t / k^n for one stage. Throws ConfigError if k <= 1.
double stage_utility(double throughput, int threads, const UtilityConfig& cfg);

/// Sum of the three per-stage utilities.
double total_utility(const ThroughputSample& sample,
                     const ConcurrencyTuple& threads,
                     const UtilityConfig& cfg);

/// Reduce an exploration log to bandwidth ceilings, per-thread rates, the
/// bottleneck, target thread counts (ceil(b / TPT_i), min 1) and the maximum
/// reachable utility. Throws InsufficientExplorationError when some stage was
/// never driven with at least one thread.
SystemProfile derive_profile(const ExplorationLog& log,
                             const UtilityConfig& cfg);

/// b * (k^-n_r* + k^-n_n* + k^-n_w*), evaluated exactly on the given profile.
double theoretical_max_reward(const SystemProfile& profile,
                              const UtilityConfig& cfg);

}  // namespace automdt
