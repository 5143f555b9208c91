#include "ssr/diffusion.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "ssr/config.hpp"
#include "ssr/error.hpp"

namespace ssr {

namespace {

void check_lengths(const Waveform& a, const Waveform& b, const char* what) {
  if (a.size() != b.size()) {
    throw InvalidArgument(std::string(what) + ": length mismatch (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  }
}

Waveform gaussian(std::size_t n, int rate, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Waveform z(std::vector<double>(n), rate);
  for (auto& v : z.samples) v = dist(rng);
  return z;
}

}  // namespace

void NoiseSchedule::validate() const {
  if (!(sigma_min > 0.0 && sigma_min < sigma_max)) {
    throw InvalidArgument("schedule: need 0 < sigma_min < sigma_max");
  }
  if (!(gamma > 0.0)) throw InvalidArgument("schedule: gamma must be positive");
  if (total_steps < 1 || inference_steps < 1 || inference_steps > total_steps) {
    throw InvalidArgument("schedule: need 1 <= inference_steps <= total_steps");
  }
}

double sigma(double t, const NoiseSchedule& s) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("sigma: t outside [0, 1]");
  const double lr = std::log(s.sigma_max / s.sigma_min);
  const double bracket = std::pow(s.sigma_max / s.sigma_min, 2.0 * t) - std::exp(-2.0 * s.gamma * t);
  return s.sigma_min * std::sqrt(std::max(bracket, 0.0) * lr / (s.gamma + lr));
}

double decay(double t, double gamma) { return std::exp(-gamma * t); }

Waveform mean_mu(const Waveform& x0, const Waveform& y, double t, double gamma) {
  check_lengths(x0, y, "mean_mu");
  if (!(t >= 0.0)) throw InvalidArgument("mean_mu: t must be nonnegative");
  const double a = decay(t, gamma), b = 1.0 - a;
  Waveform out(std::vector<double>(x0.size()), x0.sample_rate);
  for (std::size_t i = 0; i < x0.size(); ++i) out.samples[i] = a * x0.samples[i] + b * y.samples[i];
  return out;
}

Waveform forward_sample(const Waveform& x0, const Waveform& y, double t, const Waveform& z,
                        const NoiseSchedule& sched) {
  check_lengths(x0, z, "forward_sample");
  Waveform out = mean_mu(x0, y, t, sched.gamma);
  const double s = sigma(t, sched);
  for (std::size_t i = 0; i < out.size(); ++i) out.samples[i] += s * z.samples[i];
  return out;
}

double step_time(int k, const NoiseSchedule& sched) {
  if (k < 1 || k > sched.total_steps) throw InvalidArgument("step_time: k outside [1, T]");
  return static_cast<double>(k) / sched.total_steps;
}

int step_index(double t, const NoiseSchedule& sched) {
  const long k = std::lround(t * sched.total_steps);
  return static_cast<int>(std::clamp(k, 0L, static_cast<long>(sched.total_steps - 1)));
}

std::vector<double> inference_times(const NoiseSchedule& sched) {
  const int n = sched.inference_steps;
  const double start = static_cast<double>(sched.total_steps - 1) / sched.total_steps;
  std::vector<double> ts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ts[i] = n == 1 ? 0.0 : start * (1.0 - static_cast<double>(i) / (n - 1));
  return ts;
}

Waveform repaint(const Waveform& x0t, const Waveform& s_inp, int ratio, FilterKind kind) {
  check_lengths(x0t, s_inp, "repaint");
  const Waveform chain = resample_chain(x0t, ratio, kind);
  Waveform out(std::vector<double>(x0t.size()), x0t.sample_rate);
  for (std::size_t i = 0; i < x0t.size(); ++i) {
    out.samples[i] = s_inp.samples[i] + (x0t.samples[i] - chain.samples[i]);
  }
  return out;
}

Waveform reverse_from_input(const Waveform& s_inp, const PredictFn& predict,
                            const DenoiseFn& denoise, const NoiseSchedule& sched,
                            const ReverseOptions& opts, std::mt19937_64& rng) {
  sched.validate();
  const Waveform s_pred = predict(s_inp);
  check_lengths(s_pred, s_inp, "reverse: predictor output");
  Waveform x0 = s_pred;
  for (double t : inference_times(sched)) {
    Waveform z = opts.zero_noise ? Waveform(std::vector<double>(s_inp.size(), 0.0), s_inp.sample_rate)
                                 : gaussian(s_inp.size(), s_inp.sample_rate, rng);
    const Waveform x_t = forward_sample(x0, s_inp, t, z, sched);
    Waveform est = denoise(x_t, s_pred, s_inp, step_index(t, sched));
    check_lengths(est, s_inp, "reverse: denoiser output");
    x0 = repaint(est, s_inp, opts.ratio, opts.kind);
  }
  return x0;
}

Waveform reverse_infer(const Waveform& s_lr, const SrModel& model, const NoiseSchedule& sched,
                       const ReverseOptions& opts, std::mt19937_64& rng) {
  const Waveform s_inp = cubic_spline_upsample(s_lr, opts.ratio);
  const Lossmap lm = model.arcn.lossmap_for(s_inp.size(), opts.ratio);
  auto predict = [&](const Waveform& x) { return model.dparn.forward(x); };
  auto denoise = [&](const Waveform& x_t, const Waveform& s_pred, const Waveform& inp, int step) {
    return model.arcn.forward(x_t, s_pred, inp, lm, step);
  };
  return reverse_from_input(s_inp, predict, denoise, sched, opts, rng);
}

ExampleLoss example_loss(const SrModel& model, const Waveform& s_hr, const Waveform& s_inp,
                         std::size_t valid_len, int ratio, int k, const Waveform& z,
                         const NoiseSchedule& sched) {
  check_lengths(s_hr, s_inp, "example_loss");
  if (valid_len == 0 || valid_len > s_hr.size()) throw InvalidArgument("example_loss: bad valid length");
  const double t = step_time(k, sched);
  const int fl = model.arcn.config().frame_len(), hop = model.arcn.config().hop();
  const int n = static_cast<int>(s_hr.size()), valid = static_cast<int>(valid_len);

  const Tensor inp = to_tensor(s_inp), hr = to_tensor(s_hr);
  const Tensor pred = model.dparn.forward(inp);
  const Tensor x_t = to_tensor(forward_sample(s_hr, s_inp, t, z, sched));
  const Tensor est =
      model.arcn.forward(x_t, pred, inp, model.arcn.lossmap_for(s_hr.size(), ratio), step_index(t, sched));

  auto prefix = [&](const Tensor& x) { return valid == n ? x : slice_last(x, 0, valid); };
  const Tensor hr_valid = prefix(hr);
  const Tensor spec_ref = stft(hr_valid, fl, hop);
  const Tensor l_pred = loss_pred(stft(prefix(pred), fl, hop), spec_ref, spec_ref.dim(1));
  const DiffLoss d = loss_tf(prefix(est), hr_valid, valid, fl, hop);
  const double lam = lambda_weight(t);

  ExampleLoss out;
  out.total = add(l_pred, scale(d.l_diff, lam));
  out.report.l_pred = l_pred.item();
  out.report.l_time = d.l_time.item();
  out.report.l_freq = d.l_freq.item();
  out.report.l_diff = d.l_diff.item();
  out.report.lambda_weight = lam;
  out.report.total = out.total.item();
  return out;
}

void write_schedule_csv(std::ostream& out, const NoiseSchedule& sched) {
  out << "t,sigma,decay\n";
  for (int i = 0; i <= 1000; ++i) {
    const double t = i / 1000.0;
    out << format_double(t) << ',' << format_double(sigma(t, sched)) << ','
        << format_double(decay(t, sched.gamma)) << '\n';
  }
}

}  // namespace ssr
