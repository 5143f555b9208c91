#pragma once

#include <functional>
#include <iosfwd>
#include <random>
#include <vector>

#include "ssr/networks.hpp"
#include "ssr/objectives.hpp"
#include "ssr/resample.hpp"
#include "ssr/signal.hpp"
#include "ssr/tensor.hpp"

namespace ssr {

struct NoiseSchedule {
  double sigma_min = 0.05;
  double sigma_max = 0.5;
  double gamma = 1.5;
  int total_steps = 1000;
  int inference_steps = 10;

  void validate() const;
};

/// Standard deviation of x_t around its mean at continuous time t in [0, 1].
double sigma(double t, const NoiseSchedule& sched);
/// e^{-gamma t}: weight of x0 in the mean.
double decay(double t, double gamma);

/// mu = e^{-gamma t} x0 + (1 - e^{-gamma t}) y
Waveform mean_mu(const Waveform& x0, const Waveform& y, double t, double gamma);
/// mu + sigma(t) z
Waveform forward_sample(const Waveform& x0, const Waveform& y, double t, const Waveform& z,
                        const NoiseSchedule& sched);

/// Integer step k in {1..T} -> t = k / T.
double step_time(int k, const NoiseSchedule& sched);
/// Continuous t -> embedding index round(t T), clamped to [0, T).
int step_index(double t, const NoiseSchedule& sched);
/// Uniform grid of inference_steps times from (T - 1) / T down to 0.
std::vector<double> inference_times(const NoiseSchedule& sched);

/// s_inp + (x0t - resample_chain(x0t)): keeps the high band of x0t and the
/// low band of s_inp.
Waveform repaint(const Waveform& x0t, const Waveform& s_inp, int ratio, FilterKind kind);

using PredictFn = std::function<Waveform(const Waveform& s_inp)>;
using DenoiseFn = std::function<Waveform(const Waveform& x_t, const Waveform& s_pred,
                                         const Waveform& s_inp, int step)>;

struct ReverseOptions {
  int ratio = 2;
  FilterKind kind = FilterKind::chebyshev;
  bool zero_noise = false;  ///< z = 0 at every step
};

/// Shallow reverse loop from x0 = predict(s_inp) with repainting after every
/// denoising step.
Waveform reverse_from_input(const Waveform& s_inp, const PredictFn& predict,
                            const DenoiseFn& denoise, const NoiseSchedule& sched,
                            const ReverseOptions& opts, std::mt19937_64& rng);

/// Full inference from an LR waveform: spline upsampling, then the reverse loop
/// with the model's networks.
Waveform reverse_infer(const Waveform& s_lr, const SrModel& model, const NoiseSchedule& sched,
                       const ReverseOptions& opts, std::mt19937_64& rng);

/// One training example with fixed step k and noise z.
struct ExampleLoss {
  Tensor total;
  LossReport report;
};

ExampleLoss example_loss(const SrModel& model, const Waveform& s_hr, const Waveform& s_inp,
                         std::size_t valid_len, int ratio, int k, const Waveform& z,
                         const NoiseSchedule& sched);

/// Writes `t,sigma,decay` rows over a 1001-point grid of [0, 1].
void write_schedule_csv(std::ostream& out, const NoiseSchedule& sched);

}  // namespace ssr
