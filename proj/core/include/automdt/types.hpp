#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace automdt {

/// Pipeline stages: disk -> sender buffer (read), sender -> receiver buffer
/// (network), receiver buffer -> disk (write).
enum class Stage : int { Read = 0, Net = 1, Write = 2 };

inline constexpr std::array<Stage, 3> kStages{Stage::Read, Stage::Net,
                                              Stage::Write};
inline constexpr const char* kStageNames[3] = {"read", "net", "write"};

/// Worker-thread counts per stage. Production actions live in [1, n_max];
/// zero is allowed to express an idle stage.
struct ConcurrencyTuple {
  int read = 0;
  int net = 0;
  int write = 0;

  int operator[](int i) const { return i == 0 ? read : (i == 1 ? net : write); }
  int& operator[](int i) { return i == 0 ? read : (i == 1 ? net : write); }
  bool operator==(const ConcurrencyTuple&) const = default;
};

/// Measured per-stage throughputs over one window, in scenario units/s.
struct ThroughputSample {
  double read = 0;
  double net = 0;
  double write = 0;

  double operator[](int i) const {
    return i == 0 ? read : (i == 1 ? net : write);
  }
  double& operator[](int i) { return i == 0 ? read : (i == 1 ? net : write); }
  bool operator==(const ThroughputSample&) const = default;
};

/// Penalty base for the per-stage utility t / k^n. Must be > 1, otherwise
/// utility has no global maximum in n.
struct UtilityConfig {
  double k = 1.02;
};

/// Agent input: thread counts (3, scaled by n_max), throughputs (3, scaled by
/// the bottleneck or the link speed before profiling), then free sender and
/// receiver buffer fractions.
using Observation = std::array<double, 8>;

inline constexpr int kObsDim = 8;

struct ExplorationRecord {
  double ts = 0;  // seconds, strictly increasing across a log
  ConcurrencyTuple threads;
  ThroughputSample sample;
};

using ExplorationLog = std::vector<ExplorationRecord>;

/// What the exploration phase learns about a system: per-stage bandwidth
/// ceilings, per-thread rates, the end-to-end bottleneck, the thread counts
/// needed to reach it, and the highest utility those allow.
struct SystemProfile {
  std::array<double, 3> bandwidth{};   // B_i = max observed stage throughput
  std::array<double, 3> per_thread{};  // TPT_i = max observed T_i / n_i
  double bottleneck = 0;               // b = min(B)
  std::array<int, 3> target_threads{};  // n_i* = ceil(b / TPT_i), >= 1
  double max_reward = 0;  // b * (k^-n_r* + k^-n_n* + k^-n_w*)
};

/// One environment step: measured sample, reward (utility, divided by the
/// profile's max reward when one is attached), the next observation, and raw
/// per-stage byte counts for the window.
struct StepOutcome {
  ThroughputSample sample;
  double reward = 0;
  Observation obs{};
  std::array<double, 3> stage_bytes{};
};

}  // namespace automdt
