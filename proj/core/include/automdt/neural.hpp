#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "automdt/rng.hpp"
#include "automdt/types.hpp"

namespace automdt {

inline constexpr int kHiddenDim = 256;
inline constexpr int kActionDim = 3;
inline constexpr double kLogStdMin = -2.0;
inline constexpr double kLogStdMax = 1.0;
inline constexpr double kLayerNormEps = 1e-5;

struct Linear {
  int in = 0;
  int out = 0;
  std::vector<double> w;  // out x in, row-major
  std::vector<double> b;  // out

  void resize(int in_dim, int out_dim);
};

struct LayerNorm {
  int dim = 0;
  std::vector<double> gain;
  std::vector<double> bias;

  void resize(int d);
};

/// Policy residual block: linear, layer-norm, ReLU, linear, layer-norm,
/// skip-add, ReLU.
struct PolicyBlock {
  Linear lin1, lin2;
  LayerNorm norm1, norm2;
};

/// Value residual block: tanh(x + lin2(tanh(lin1(x)))).
struct ValueBlock {
  Linear lin1, lin2;
};

/// Actor: tanh embedding into 256 dims, three residual blocks, tanh, linear
/// mean head, plus three free log-std parameters clamped to
/// [kLogStdMin, kLogStdMax] at every use.
struct PolicyNet {
  Linear embed;
  std::array<PolicyBlock, 3> blocks;
  Linear mean_head;
  std::array<double, 3> log_std{};

  void init(Rng& rng);        // random weights, biases zero, log_std zero
  void init_shapes();         // zeroed tensors of the right shapes
  void fill(double value);
  std::size_t parameter_count() const;

  /// Visit every parameter tensor in a fixed order. F: (span<double>) or
  /// (name, rows, cols, span<double>) for the named variant.
  template <typename F>
  void visit(F&& f);
  template <typename F>
  void visit(F&& f) const;
  template <typename F>
  void visit_named(F&& f);
};

/// Critic: tanh embedding, two tanh residual blocks, scalar linear head.
struct ValueNet {
  Linear embed;
  std::array<ValueBlock, 2> blocks;
  Linear head;

  void init(Rng& rng);
  void init_shapes();
  void fill(double value);
  std::size_t parameter_count() const;

  template <typename F>
  void visit(F&& f);
  template <typename F>
  void visit(F&& f) const;
  template <typename F>
  void visit_named(F&& f);
};

struct PolicyOutput {
  std::array<double, 3> mean{};
  std::array<double, 3> stddev{};
  std::array<double, 3> log_std_eff{};  // clamped values actually used
};

/// Forward-pass caches needed by the corresponding backward pass.
struct PolicyTrace {
  std::vector<double> h0;  // post-tanh embedding
  struct Block {
    std::vector<double> x;      // block input
    std::vector<double> xhat1;  // normalized pre-gain values, first norm
    double inv_std1 = 0;
    std::vector<double> a1;     // post-ReLU
    std::vector<double> xhat2;
    double inv_std2 = 0;
    std::vector<double> sum;    // skip-add pre-ReLU
    std::vector<double> out;    // post-ReLU block output
  };
  std::array<Block, 3> blocks;
  std::vector<double> y;  // post-tanh features feeding the mean head
};

struct ValueTrace {
  std::vector<double> h0;
  struct Block {
    std::vector<double> x;
    std::vector<double> a1;   // tanh(lin1 x)
    std::vector<double> out;  // tanh(x + lin2 a1)
  };
  std::array<Block, 2> blocks;
};

/// Deterministic forward pass. Throws ValidationError on non-finite input.
PolicyOutput policy_forward(const PolicyNet& net, const Observation& obs,
                            PolicyTrace* trace = nullptr);

/// Accumulate d(loss)/d(params) into `grad` given upstream gradients on the
/// mean head outputs and on the (clamped) log-std parameters.
void policy_backward(const PolicyNet& net, const PolicyTrace& trace,
                     const Observation& obs,
                     const std::array<double, 3>& d_mean,
                     const std::array<double, 3>& d_log_std, PolicyNet& grad);

double value_forward(const ValueNet& net, const Observation& obs,
                     ValueTrace* trace = nullptr);

void value_backward(const ValueNet& net, const ValueTrace& trace,
                    const Observation& obs, double d_value, ValueNet& grad);

struct GaussianStats {
  double log_prob = 0;
  double entropy = 0;
};

/// Diagonal-Gaussian log density of `action` and total entropy, summed over
/// dimensions. Throws on non-positive stddev.
GaussianStats gaussian_stats(std::span<const double> mean,
                             std::span<const double> stddev,
                             std::span<const double> action);

/// Standard Adam with bias correction over a flat parameter vector.
class AdamState {
 public:
  AdamState() = default;
  explicit AdamState(std::size_t n) { resize(n); }

  void resize(std::size_t n);
  std::size_t size() const { return m_.size(); }
  long step_count() const { return t_; }

  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;

  /// One update over the whole vector; increments the shared step counter.
  void step(std::span<double> params, std::span<const double> grads,
            double lr);

  /// Piecewise variant for parameter structs: bump the step counter once,
  /// then apply tensor slices at their flat offsets.
  void begin_step() { ++t_; }
  void apply(std::span<double> params, std::span<const double> grads,
             double lr, std::size_t offset);

 private:
  std::vector<double> m_;
  std::vector<double> v_;
  long t_ = 0;
};

/// One Adam update of a whole network from a same-shaped gradient holder.
void adam_step(PolicyNet& params, const PolicyNet& grads, AdamState& state,
               double lr);
void adam_step(ValueNet& params, const ValueNet& grads, AdamState& state,
               double lr);

/// Trained-model archive: network dimensions, the utility/action settings the
/// model was trained with, the system profile (when known) and all tensors.
struct Checkpoint {
  int obs_dim = kObsDim;
  int hidden_dim = kHiddenDim;
  int action_dim = kActionDim;
  double k = 1.02;
  int n_max = 30;
  std::optional<SystemProfile> profile;
  PolicyNet policy;
  ValueNet value;
};

inline constexpr int kCheckpointFormatVersion = 1;

void save_checkpoint(const Checkpoint& ckpt,
                     const std::filesystem::path& file);
Checkpoint load_checkpoint(const std::filesystem::path& file);

// --- template definitions ---

template <typename F>
void PolicyNet::visit(F&& f) {
  f(std::span<double>(embed.w));
  f(std::span<double>(embed.b));
  for (auto& blk : blocks) {
    f(std::span<double>(blk.lin1.w));
    f(std::span<double>(blk.lin1.b));
    f(std::span<double>(blk.norm1.gain));
    f(std::span<double>(blk.norm1.bias));
    f(std::span<double>(blk.lin2.w));
    f(std::span<double>(blk.lin2.b));
    f(std::span<double>(blk.norm2.gain));
    f(std::span<double>(blk.norm2.bias));
  }
  f(std::span<double>(mean_head.w));
  f(std::span<double>(mean_head.b));
  f(std::span<double>(log_std));
}

template <typename F>
void PolicyNet::visit(F&& f) const {
  const_cast<PolicyNet*>(this)->visit(
      [&](std::span<double> s) { f(std::span<const double>(s)); });
}

template <typename F>
void PolicyNet::visit_named(F&& f) {
  f("embed.w", embed.out, embed.in, std::span<double>(embed.w));
  f("embed.b", embed.out, 1, std::span<double>(embed.b));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto& blk = blocks[i];
    const std::string p = "blocks." + std::to_string(i) + ".";
    f(p + "lin1.w", blk.lin1.out, blk.lin1.in, std::span<double>(blk.lin1.w));
    f(p + "lin1.b", blk.lin1.out, 1, std::span<double>(blk.lin1.b));
    f(p + "norm1.gain", blk.norm1.dim, 1, std::span<double>(blk.norm1.gain));
    f(p + "norm1.bias", blk.norm1.dim, 1, std::span<double>(blk.norm1.bias));
    f(p + "lin2.w", blk.lin2.out, blk.lin2.in, std::span<double>(blk.lin2.w));
    f(p + "lin2.b", blk.lin2.out, 1, std::span<double>(blk.lin2.b));
    f(p + "norm2.gain", blk.norm2.dim, 1, std::span<double>(blk.norm2.gain));
    f(p + "norm2.bias", blk.norm2.dim, 1, std::span<double>(blk.norm2.bias));
  }
  f("mean_head.w", mean_head.out, mean_head.in, std::span<double>(mean_head.w));
  f("mean_head.b", mean_head.out, 1, std::span<double>(mean_head.b));
  f("log_std", kActionDim, 1, std::span<double>(log_std));
}

template <typename F>
void ValueNet::visit(F&& f) {
  f(std::span<double>(embed.w));
  f(std::span<double>(embed.b));
  for (auto& blk : blocks) {
    f(std::span<double>(blk.lin1.w));
    f(std::span<double>(blk.lin1.b));
    f(std::span<double>(blk.lin2.w));
    f(std::span<double>(blk.lin2.b));
  }
  f(std::span<double>(head.w));
  f(std::span<double>(head.b));
}

template <typename F>
void ValueNet::visit(F&& f) const {
  const_cast<ValueNet*>(this)->visit(
      [&](std::span<double> s) { f(std::span<const double>(s)); });
}

template <typename F>
void ValueNet::visit_named(F&& f) {
  f("embed.w", embed.out, embed.in, std::span<double>(embed.w));
  f("embed.b", embed.out, 1, std::span<double>(embed.b));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto& blk = blocks[i];
    const std::string p = "blocks." + std::to_string(i) + ".";
    f(p + "lin1.w", blk.lin1.out, blk.lin1.in, std::span<double>(blk.lin1.w));
    f(p + "lin1.b", blk.lin1.out, 1, std::span<double>(blk.lin1.b));
    f(p + "lin2.w", blk.lin2.out, blk.lin2.in, std::span<double>(blk.lin2.w));
    f(p + "lin2.b", blk.lin2.out, 1, std::span<double>(blk.lin2.b));
  }
  f("head.w", head.out, head.in, std::span<double>(head.w));
  f("head.b", head.out, 1, std::span<double>(head.b));
}

}  // namespace automdt
