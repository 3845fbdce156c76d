#pragma once

#include <iosfwd>
#include <optional>

#include "automdt/rng.hpp"
#include "automdt/types.hpp"

namespace automdt {

/// Contract shared by the event-driven simulator and the live in-process
/// pipeline. step() is total: it always returns after one window, blocked
/// stages simply measure zero. One environment instance must be driven from a
/// single flow of control.
class Environment {
 public:
  virtual ~Environment() = default;

  /// Empty the staging buffers, warm up with a uniform-random tuple in
  /// [1, n_max]^3 and return the resulting observation.
  virtual Observation reset(Rng& rng) = 0;

  /// Apply a concurrency tuple for one window and measure it.
  virtual StepOutcome step(const ConcurrencyTuple& threads) = 0;

  /// Bytes still to deliver, or nullopt when the data supply is unbounded.
  virtual std::optional<double> remaining_bytes() const = 0;

  /// Bound (or unbound) the data supply; resets transfer accounting.
  virtual void set_dataset_bytes(std::optional<double> bytes) = 0;

  virtual double window_seconds() const = 0;
  virtual int max_threads() const = 0;
};

/// Random-threads profiling run: `probes` windows, each driven by a uniform
/// tuple in [1, n_max]^3, logged one record per window.
ExplorationLog explore(Environment& env, int probes, int n_max, Rng& rng);

/// CSV with header `ts,n_r,n_n,n_w,t_r,t_n,t_w`, one row per probe,
/// shortest-round-trip decimal throughputs.
void write_exploration_csv(std::ostream& out, const ExplorationLog& log);
ExplorationLog read_exploration_csv(std::istream& in);

}  // namespace automdt
