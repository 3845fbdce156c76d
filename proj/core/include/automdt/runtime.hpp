#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "automdt/environment.hpp"
#include "automdt/neural.hpp"
#include "automdt/rng.hpp"
#include "automdt/types.hpp"

namespace automdt {

struct TransferStep {
  double ts = 0;  // seconds since transfer start, end of the window
  ConcurrencyTuple threads;
  ThroughputSample sample;
  double reward = 0;
  double sender_used = 0;
  double receiver_used = 0;
};

/// Production-run trace: the per-window series plus summary figures.
struct TransferReport {
  std::vector<TransferStep> series;
  double total_bytes = 0;
  double completion_seconds = 0;
  int steps = 0;
  /// 1-based step at which each stage first reached its profile target
  /// thread count; -1 when never reached or no profile was available.
  std::array<int, 3> first_reach{-1, -1, -1};
};

/// A transfer that stopped making progress; carries what was recorded.
class StallError : public std::runtime_error {
 public:
  StallError(std::string message, TransferReport partial)
      : std::runtime_error(std::move(message)), partial_(std::move(partial)) {}
  const TransferReport& partial() const { return partial_; }

 private:
  TransferReport partial_;
};

struct ActionResult {
  std::array<double, 3> raw{};  // Gaussian sample (or the mean)
  ConcurrencyTuple threads;     // round-half-away-from-zero, clamped [1,n_max]
};

/// Turn one policy evaluation into a concurrency tuple. Deterministic mode
/// uses the mean; otherwise samples from the learned Gaussian.
ActionResult act(const PolicyNet& policy, const Observation& obs, Rng& rng,
                 int n_max, bool deterministic);

struct RunOptions {
  bool deterministic = false;
  std::uint64_t seed = 0;
  int stall_limit = 25;  // consecutive zero-progress windows before aborting
};

/// Drive the environment with the checkpointed policy until the dataset is
/// fully delivered. Every step reassigns the full concurrency tuple.
TransferReport run_transfer(Environment& env, const Checkpoint& ckpt,
                            double dataset_bytes, const RunOptions& opts);

/// CSV with header `ts,n_r,n_n,n_w,t_r,t_n,t_w,reward,snd_used,rcv_used`.
void write_report_csv(std::ostream& out, const TransferReport& report);
TransferReport read_report_csv(std::istream& in);

/// Summary object {total_bytes, completion_s, steps, first_reach:{...}}.
std::string report_summary_json(const TransferReport& report);
TransferReport read_report_summary_json(const std::string& text);

}  // namespace automdt
