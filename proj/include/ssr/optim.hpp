#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ssr/tensor.hpp"

namespace ssr {

struct NamedParameter {
  std::string name;
  Tensor tensor;
};

/// Ordered collection of trainable tensors addressed by path names.
class ParameterSet {
 public:
  /// Creates a parameter initialized uniformly in [-bound, bound].
  Tensor add_uniform(const std::string& name, Shape shape, double bound, std::mt19937_64& rng);
  Tensor add_constant(const std::string& name, Shape shape, double value);

  /// Adopts every parameter of `other` under `prefix`.
  void extend(const ParameterSet& other, const std::string& prefix);

  std::span<NamedParameter> items() { return params_; }
  std::span<const NamedParameter> items() const { return params_; }
  std::size_t size() const { return params_.size(); }
  std::size_t scalar_count() const;
  const NamedParameter* find(const std::string& name) const;

  void zero_grad();
  /// Copies values from `src` (matched by position, shapes must agree).
  void copy_values_from(const ParameterSet& src);

 private:
  Tensor add(const std::string& name, Tensor t);
  std::vector<NamedParameter> params_;
};

struct AdamState {
  double lr = 6e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  std::int64_t step = 0;
  std::vector<std::vector<double>> m;
  std::vector<std::vector<double>> v;
};

/// Bias-corrected Adam update of every parameter from its gradient.
void adam_step(AdamState& opt, ParameterSet& params);

/// Scales all gradients by max_norm / ||g|| when the global L2 norm exceeds
/// max_norm. Returns the scale applied (1 when untouched).
double clip_global_norm(ParameterSet& params, double max_norm);
double global_grad_norm(const ParameterSet& params);

struct EmaState {
  double decay = 0.999;
  std::vector<std::vector<double>> shadow;
};

EmaState ema_init(const ParameterSet& params, double decay);
/// shadow <- decay * shadow + (1 - decay) * param
void ema_update(EmaState& ema, const ParameterSet& params);
/// Overwrites parameter values with the shadow copy.
void ema_apply(const EmaState& ema, ParameterSet& params);

}  // namespace ssr
