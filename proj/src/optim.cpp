#include "ssr/optim.hpp"

#include <cmath>

#include "ssr/error.hpp"

namespace ssr {

Tensor ParameterSet::add(const std::string& name, Tensor t) {
  if (find(name)) throw InvalidArgument("duplicate parameter name '" + name + "'");
  params_.push_back({name, t});
  return t;
}

Tensor ParameterSet::add_uniform(const std::string& name, Shape shape, double bound,
                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-bound, bound);
  std::vector<double> v(shape_numel(shape));
  for (double& x : v) x = dist(rng);
  return add(name, Tensor::from(std::move(shape), std::move(v), true));
}

Tensor ParameterSet::add_constant(const std::string& name, Shape shape, double value) {
  return add(name, Tensor::full(std::move(shape), value, true));
}

void ParameterSet::extend(const ParameterSet& other, const std::string& prefix) {
  for (const auto& p : other.params_) add(prefix + p.name, p.tensor);
}

std::size_t ParameterSet::scalar_count() const {
  std::size_t n = 0;
  for (const auto& p : params_) n += p.tensor.numel();
  return n;
}

const NamedParameter* ParameterSet::find(const std::string& name) const {
  for (const auto& p : params_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

void ParameterSet::zero_grad() {
  for (auto& p : params_) p.tensor.zero_grad();
}

void ParameterSet::copy_values_from(const ParameterSet& src) {
  if (src.size() != size()) throw InvalidArgument("copy_values_from: parameter count mismatch");
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (src.params_[i].tensor.shape() != params_[i].tensor.shape()) {
      throw InvalidArgument("copy_values_from: shape mismatch at " + params_[i].name);
    }
    auto d = src.params_[i].tensor.data();
    std::copy(d.begin(), d.end(), params_[i].tensor.mutable_data().begin());
  }
}

void adam_step(AdamState& opt, ParameterSet& params) {
  auto items = params.items();
  if (opt.m.empty()) {
    for (const auto& p : items) {
      opt.m.emplace_back(p.tensor.numel(), 0.0);
      opt.v.emplace_back(p.tensor.numel(), 0.0);
    }
  }
  if (opt.m.size() != items.size()) throw InvalidArgument("adam_step: state/parameter mismatch");
  ++opt.step;
  const double c1 = 1.0 - std::pow(opt.beta1, static_cast<double>(opt.step));
  const double c2 = 1.0 - std::pow(opt.beta2, static_cast<double>(opt.step));
  for (std::size_t i = 0; i < items.size(); ++i) {
    Tensor& t = items[i].tensor;
    if (!t.has_grad()) continue;
    auto g = t.grad();
    auto x = t.mutable_data();
    auto& m = opt.m[i];
    auto& v = opt.v[i];
    if (m.size() != x.size()) throw InvalidArgument("adam_step: moment shape mismatch");
    for (std::size_t k = 0; k < x.size(); ++k) {
      m[k] = opt.beta1 * m[k] + (1.0 - opt.beta1) * g[k];
      v[k] = opt.beta2 * v[k] + (1.0 - opt.beta2) * g[k] * g[k];
      const double mh = m[k] / c1;
      const double vh = v[k] / c2;
      x[k] -= opt.lr * mh / (std::sqrt(vh) + opt.eps);
    }
  }
}

double global_grad_norm(const ParameterSet& params) {
  double s = 0.0;
  for (const auto& p : params.items()) {
    if (!p.tensor.has_grad()) continue;
    for (double g : p.tensor.grad()) s += g * g;
  }
  return std::sqrt(s);
}

double clip_global_norm(ParameterSet& params, double max_norm) {
  const double norm = global_grad_norm(params);
  if (!(norm > max_norm)) return 1.0;
  const double factor = max_norm / norm;
  for (auto& p : params.items()) {
    if (!p.tensor.has_grad()) continue;
    for (double& g : p.tensor.mutable_grad()) g *= factor;
  }
  return factor;
}

EmaState ema_init(const ParameterSet& params, double decay) {
  if (!(decay >= 0.0 && decay <= 1.0)) throw InvalidArgument("EMA decay must lie in [0, 1]");
  EmaState e;
  e.decay = decay;
  for (const auto& p : params.items()) e.shadow.emplace_back(p.tensor.data().begin(), p.tensor.data().end());
  return e;
}

void ema_update(EmaState& ema, const ParameterSet& params) {
  auto items = params.items();
  if (ema.shadow.size() != items.size()) throw InvalidArgument("ema_update: parameter count mismatch");
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto x = items[i].tensor.data();
    auto& s = ema.shadow[i];
    if (s.size() != x.size()) throw InvalidArgument("ema_update: shape mismatch at " + items[i].name);
    for (std::size_t k = 0; k < x.size(); ++k) s[k] = ema.decay * s[k] + (1.0 - ema.decay) * x[k];
  }
}

void ema_apply(const EmaState& ema, ParameterSet& params) {
  auto items = params.items();
  if (ema.shadow.size() != items.size()) throw InvalidArgument("ema_apply: parameter count mismatch");
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto x = items[i].tensor.mutable_data();
    if (ema.shadow[i].size() != x.size()) throw InvalidArgument("ema_apply: shape mismatch");
    std::copy(ema.shadow[i].begin(), ema.shadow[i].end(), x.begin());
  }
}

}  // namespace ssr
