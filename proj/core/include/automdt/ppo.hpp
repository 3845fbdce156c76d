#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "automdt/environment.hpp"
#include "automdt/neural.hpp"
#include "automdt/types.hpp"

namespace automdt {

struct TrainingConfig {
  int steps_per_episode = 10;   // M
  int max_episodes = 30000;     // N
  double learning_rate = 3e-4;  // alpha
  double discount = 0.99;       // gamma
  double clip = 0.2;            // epsilon
  double entropy_coef = 0.1;
  int stagnation_limit = 1000;
  double convergence_fraction = 0.9;
  int update_epochs = 1;  // >1 re-runs the update on the same batch
  std::uint64_t seed = 0;

  /// Optional early exit for harnesses: stop as soon as the best mean-step
  /// reward reaches this fraction of the per-step maximum.
  std::optional<double> stop_at_best_fraction;
};

/// One episode of experience. Actions are kept in raw (pre-rounding) form so
/// policy-ratio log-probs are exact; the environment saw the rounded tuple.
struct Trajectory {
  std::vector<Observation> obs;
  std::vector<std::array<double, 3>> actions;
  std::vector<double> rewards;
  std::vector<double> old_log_prob;

  int size() const { return static_cast<int>(rewards.size()); }
};

struct TrainingState {
  int episode = 0;
  double best_reward = 0;  // best episode (sum-of-steps) reward so far
  int stagnant = 0;        // episodes since best_reward last improved
  double max_step_reward = 1.0;  // per-step ceiling, in reward units
};

struct LossParts {
  double actor = 0;
  double critic = 0;
  double entropy = 0;
  double total = 0;
};

struct EpisodeStats {
  int episode = 0;
  double ep_reward = 0;
  double mean_step_reward = 0;
  double actor_loss = 0;
  double critic_loss = 0;
  double entropy = 0;
  double best_reward = 0;
  int stagnant = 0;
};

struct TrainResult {
  Checkpoint best;             // parameters at the best episode
  TrainingState state;
  std::vector<EpisodeStats> history;
  bool converged = false;
  int best_episode = -1;
};

struct GradientUpdate {
  LossParts loss;
  PolicyNet policy_grad;
  ValueNet value_grad;
};

/// G_t = r_t + gamma * G_{t+1}, computed by backward recursion.
std::vector<double> discounted_returns(std::span<const double> rewards,
                                       double gamma);

/// min(ratio * A, clip(ratio, 1-eps, 1+eps) * A); the actor loss negates it.
double clipped_objective(double ratio, double advantage, double eps);

/// Roll one episode: sample raw actions from the policy Gaussian, apply the
/// rounded/clamped tuple, record rewards and rollout-time log-probs. The
/// caller resets the environment immediately before.
Trajectory run_episode(Environment& env, const PolicyNet& policy, int steps,
                       int n_max, Rng& rng);

/// Single combined actor-critic update over the episode batch: clipped
/// surrogate (advantages treated as constants), 0.5*MSE critic term, minus
/// entropy_coef * entropy, all averaged over steps. Gradients are analytic.
GradientUpdate compute_gradients(const PolicyNet& policy, const ValueNet& value,
                                 const Trajectory& batch,
                                 const TrainingConfig& cfg);

/// Best mean-step reward reached the convergence fraction of the per-step
/// maximum, and no improvement for the stagnation window.
bool converged(const TrainingState& state, const TrainingConfig& cfg);

/// Full training loop; deterministic given (environment, profile, config).
/// Throws TrainingError on non-finite loss after dumping a diagnostic
/// snapshot next to `diagnostics_dir` when provided.
TrainResult train(Environment& env, const SystemProfile& profile,
                  const TrainingConfig& cfg,
                  const std::filesystem::path& diagnostics_dir = {});

/// CSV with header
/// `episode,ep_reward,mean_step_reward,actor_loss,critic_loss,entropy,best_reward,stagnant`.
void write_history_csv(std::ostream& out,
                       std::span<const EpisodeStats> history);
std::vector<EpisodeStats> read_history_csv(std::istream& in);

}  // namespace automdt
