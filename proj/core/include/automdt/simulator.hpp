#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "automdt/environment.hpp"
#include "automdt/types.hpp"

namespace automdt {

/// Everything the simulator needs to model one source->destination pair:
/// per-thread stage rates, stage bandwidth caps, staging buffer sizes, the
/// per-task transfer quantum and the retry delay for blocked tasks. Rates and
/// capacities share one unit system (the fixtures use megabits).
struct ScenarioSpec {
  double tpt_read = 0;
  double tpt_net = 0;
  double tpt_write = 0;
  double cap_read = 0;
  double cap_net = 0;
  double cap_write = 0;
  double sender_capacity = 0;
  double receiver_capacity = 0;
  double chunk = 0;  // defaults to min(capacity)/64 when absent from JSON
  double retry_delta = 1e-3;
  double window = 1.0;
  int n_max = 30;
  double k = 1.02;
  std::uint64_t seed = 0;

  // Optional metadata carried by fixture files.
  std::string name;
  std::string unit;
  std::optional<std::array<int, 3>> expected_optimal;

  double tpt(Stage s) const {
    return s == Stage::Read ? tpt_read : (s == Stage::Net ? tpt_net : tpt_write);
  }
  double cap(Stage s) const {
    return s == Stage::Read ? cap_read : (s == Stage::Net ? cap_net : cap_write);
  }

  /// Throws ConfigError naming the offending field.
  void validate() const;

  /// Strict parse: exactly the known snake_case keys, unknown keys rejected.
  static ScenarioSpec from_json_text(const std::string& text);
  static ScenarioSpec load(const std::filesystem::path& file);
  std::string to_json_text() const;
};

/// Event-driven model of chunks flowing disk -> sender buffer -> network ->
/// receiver buffer -> disk. One get_utility() call simulates one window.
/// Buffers persist across windows; reset() clears them between episodes.
/// Deterministic: identical (spec, seed, call sequence) replays bit-exactly.
class Simulator final : public Environment {
 public:
  explicit Simulator(ScenarioSpec spec);

  /// Run one task of the given stage at time t within the current window.
  /// Returns the task's next wake-up time t + d + retry_delta (d = 0 when the
  /// task is blocked and transfers nothing).
  double task(double t, Stage stage);

  /// Simulate one window under the given thread counts and measure it.
  StepOutcome get_utility(const ConcurrencyTuple& threads);

  // Environment interface.
  Observation reset(Rng& rng) override;
  StepOutcome step(const ConcurrencyTuple& threads) override { return get_utility(threads); }
  std::optional<double> remaining_bytes() const override;
  void set_dataset_bytes(std::optional<double> bytes) override;
  double window_seconds() const override { return spec_.window; }
  int max_threads() const override { return spec_.n_max; }

  void set_profile(const SystemProfile& profile);
  const std::optional<SystemProfile>& profile() const { return profile_; }

  const ScenarioSpec& spec() const { return spec_; }
  double sender_used() const { return sender_used_; }
  double receiver_used() const { return receiver_used_; }
  double total_bytes(Stage s) const { return totals_[static_cast<int>(s)]; }

 private:
  struct Event {
    double t;
    std::uint64_t seq;
    Stage stage;
    friend bool operator>(const Event& a, const Event& b) {
      if (a.t != b.t) return a.t > b.t;
      return a.seq > b.seq;
    }
  };

  /// Transferable amount for one task of `stage` right now; 0 when blocked.
  double transfer_amount(Stage stage) const;
  bool stage_can_progress(Stage stage) const;
  void begin_window(const ConcurrencyTuple& threads);
  Observation make_observation(const ConcurrencyTuple& threads,
                               const ThroughputSample& sample) const;

  ScenarioSpec spec_;
  std::optional<SystemProfile> profile_;
  Rng internal_rng_;

  double sender_used_ = 0;
  double receiver_used_ = 0;
  std::array<double, 3> window_bytes_{};
  std::array<double, 3> window_budget_{};
  std::array<double, 3> totals_{};
  std::array<int, 3> queued_tasks_{};

  std::optional<double> dataset_bytes_;
  double read_remaining_ = 0;  // meaningful only when dataset_bytes_ is set

  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue_;
  std::uint64_t next_seq_ = 0;
  ConcurrencyTuple last_threads_{};
};

}  // namespace automdt
