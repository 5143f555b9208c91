#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "ssr/signal.hpp"
#include "ssr/tensor.hpp"

namespace ssr::test {

inline Tensor random_tensor(Shape shape, std::mt19937_64& rng, bool requires_grad = true,
                            double scale = 1.0) {
  std::normal_distribution<double> d(0.0, scale);
  std::vector<double> v(shape_numel(shape));
  for (double& x : v) x = d(rng);
  return Tensor::from(std::move(shape), std::move(v), requires_grad);
}

inline Waveform random_wave(std::size_t n, std::mt19937_64& rng, int rate = 16000) {
  std::normal_distribution<double> d(0.0, 1.0);
  Waveform w(std::vector<double>(n), rate);
  for (double& x : w.samples) x = d(rng);
  return w;
}

/// Worst relative disagreement between backward and central differences over
/// up to `probes` random coordinates of `wrt`. The denominator is floored at
/// max(floor, 1e-5 |loss|), above the central-difference roundoff eps |loss| / h,
/// so that vanishing gradients are compared absolutely.
inline double gradient_error(const std::function<Tensor()>& loss_fn, Tensor wrt, int probes,
                             std::mt19937_64& rng, double h = 1e-5, double floor = 1e-6) {
  wrt.zero_grad();
  Tensor loss = loss_fn();
  backward(loss);
  floor = std::max(floor, 1e-5 * std::fabs(loss.item()));
  std::vector<double> analytic(wrt.numel(), 0.0);
  if (wrt.has_grad()) analytic.assign(wrt.grad().begin(), wrt.grad().end());
  std::vector<std::size_t> idx(wrt.numel());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  if (static_cast<int>(idx.size()) > probes) idx.resize(static_cast<std::size_t>(probes));
  double worst = 0.0;
  auto data = wrt.mutable_data();
  for (std::size_t i : idx) {
    const double x0 = data[i];
    data[i] = x0 + h;
    const double up = loss_fn().item();
    data[i] = x0 - h;
    const double down = loss_fn().item();
    data[i] = x0;
    const double numeric = (up - down) / (2.0 * h);
    const double denom = std::max({std::fabs(numeric), std::fabs(analytic[i]), floor});
    worst = std::max(worst, std::fabs(numeric - analytic[i]) / denom);
  }
  return worst;
}

/// sum(y * w) for fixed random w, so every output element carries gradient.
inline Tensor weighted_sum(const Tensor& y, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  return sum(mul(y, random_tensor(y.shape(), rng, false)));
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace ssr::test
