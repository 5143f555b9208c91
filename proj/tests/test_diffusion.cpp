#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ssr/data.hpp"
#include "ssr/diffusion.hpp"
#include "ssr/error.hpp"
#include "support.hpp"

using namespace ssr;

namespace {

const NoiseSchedule kSched{};
constexpr double kLrNyquist = 4000.0;

// Speech-like test input at 16 kHz and its simulated LR-upsampled version.
struct Pair {
  Waveform hr, inp;
};

Pair speech_pair(std::uint64_t seed, double seconds = 1.0) {
  Pair p;
  p.hr = synth_utterance(seconds, 16000, seed);
  p.inp = simulate_lr(p.hr, 2, FilterKind::chebyshev).inp;
  return p;
}

Waveform scaled(const Waveform& w, double k) {
  Waveform out = w;
  for (double& v : out.samples) v *= k;
  return out;
}

}  // namespace

TEST_CASE("sigma matches the high-precision closed form") {
  // mpmath at 40 digits.
  const std::pair<double, double> oracle[] = {{0.001, 0.0033944361894258629511},
                                              {0.25, 0.06381273255501556988},
                                              {0.5, 0.12165733389837465063},
                                              {0.999, 0.38808728502307931124},
                                              {1.0, 0.38898265820667519786}};
  for (auto [t, s] : oracle) CHECK(std::fabs(sigma(t, kSched) - s) < 1e-12);
  CHECK(sigma(0.0, kSched) == 0.0);
  double prev = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double s = sigma(i / 1000.0, kSched);
    CHECK(s > prev);
    prev = s;
  }
  CHECK_THROWS_AS(sigma(-0.01, kSched), InvalidArgument);
  CHECK_THROWS_AS(sigma(1.01, kSched), InvalidArgument);
  NoiseSchedule bad;
  bad.sigma_min = 0.6;
  CHECK_THROWS(bad.validate());
  bad = NoiseSchedule{};
  bad.inference_steps = 1001;
  CHECK_THROWS(bad.validate());
}

TEST_CASE("mean and forward sample") {
  std::mt19937_64 rng(1);
  const Waveform x0 = test::random_wave(500, rng), y = test::random_wave(500, rng);
  CHECK(mean_mu(x0, y, 0.0, 1.5).samples == x0.samples);
  CHECK(test::max_abs_diff(mean_mu(x0, x0, 0.7, 1.5).samples, x0.samples) < 1e-15);
  CHECK(std::fabs(decay(1.0, 1.5) - 0.22313016014842982893) < 1e-16);
  const Waveform m1 = mean_mu(x0, y, 1.0, 1.5);
  for (std::size_t i = 0; i < 500; ++i) {
    CHECK(std::fabs(m1.samples[i] - (0.22313016014842982893 * x0.samples[i] + 0.77686983985157017107 * y.samples[i])) <
          1e-14);
  }
  for (double t : {0.0, 0.1, 0.5, 1.0, 3.0}) {
    const Waveform m = mean_mu(x0, y, t, 1.5);
    for (std::size_t i = 0; i < 500; ++i) {
      CHECK(m.samples[i] >= std::min(x0.samples[i], y.samples[i]) - 1e-15);
      CHECK(m.samples[i] <= std::max(x0.samples[i], y.samples[i]) + 1e-15);
    }
  }
  const Waveform z = test::random_wave(500, rng);
  CHECK(forward_sample(x0, y, 0.0, z, kSched).samples == x0.samples);
  const Waveform zero(std::vector<double>(500, 0.0), 16000);
  CHECK(test::max_abs_diff(forward_sample(x0, y, 0.4, zero, kSched).samples, mean_mu(x0, y, 0.4, 1.5).samples) ==
        0.0);
  CHECK_THROWS_AS(mean_mu(x0, test::random_wave(499, rng), 0.5, 1.5), InvalidArgument);
  CHECK_THROWS_AS(forward_sample(x0, y, 0.5, test::random_wave(3, rng), kSched), InvalidArgument);
}

TEST_CASE("forward sample variance matches sigma squared") {
  std::mt19937_64 rng(2);
  const std::size_t n = 100000;
  const Waveform x0 = test::random_wave(n, rng), y = test::random_wave(n, rng);
  const Waveform z = test::random_wave(n, rng);
  const double t = 0.6;
  const Waveform xt = forward_sample(x0, y, t, z, kSched);
  const Waveform mu = mean_mu(x0, y, t, kSched.gamma);
  double m = 0.0, v = 0.0;
  for (std::size_t i = 0; i < n; ++i) m += xt.samples[i] - mu.samples[i];
  m /= n;
  for (std::size_t i = 0; i < n; ++i) v += std::pow(xt.samples[i] - mu.samples[i] - m, 2.0);
  v /= n - 1;
  const double s2 = std::pow(sigma(t, kSched), 2.0);
  CHECK(std::fabs(v / s2 - 1.0) < 0.03);
}

TEST_CASE("step mapping and inference grid") {
  CHECK(step_time(1, kSched) == 0.001);
  CHECK(step_time(1000, kSched) == 1.0);
  CHECK_THROWS_AS(step_time(0, kSched), InvalidArgument);
  CHECK_THROWS_AS(step_time(1001, kSched), InvalidArgument);
  CHECK(step_index(0.0, kSched) == 0);
  CHECK(step_index(0.5, kSched) == 500);
  CHECK(step_index(1.0, kSched) == 999);
  CHECK(step_index(step_time(37, kSched), kSched) == 37);
  const auto ts = inference_times(kSched);
  REQUIRE(ts.size() == 10);
  CHECK(ts.front() == 0.999);
  CHECK(ts.back() == 0.0);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    CHECK(ts[i] < ts[i - 1]);
    CHECK(std::fabs((ts[i - 1] - ts[i]) - 0.111) < 1e-12);
  }
}

TEST_CASE("repaint bands") {
  const Pair p = speech_pair(11);
  const Waveform zero(std::vector<double>(p.inp.size(), 0.0), 16000);
  CHECK(repaint(zero, p.inp, 2, FilterKind::chebyshev).samples == p.inp.samples);

  const Waveform self = repaint(p.inp, p.inp, 2, FilterKind::chebyshev);
  CHECK(lsd_band(p.inp, self, 0.0, 0.8 * kLrNyquist) < 0.3);

  // Estimates of the same utterance: the low band comes from s_inp, the high
  // band from the estimate, and a second repaint changes little.
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  Waveform noisy = p.hr;
  for (double& v : noisy.samples) v += 0.05 * g(rng);
  for (const Waveform& x : {p.hr, scaled(p.hr, 0.5), noisy}) {
    const Waveform r = repaint(x, p.inp, 2, FilterKind::chebyshev);
    CHECK(lsd_band(p.inp, r, 0.0, 0.8 * kLrNyquist) < 0.3);
    CHECK(lsd_band(x, r, 1.2 * kLrNyquist, 8000.0) < 0.3);
    const Waveform rr = repaint(r, p.inp, 2, FilterKind::chebyshev);
    CHECK(lsd_band(r, rr, 0.0, 0.8 * kLrNyquist) < 0.3);
  }
  // Unrelated estimates still keep their own high band. Their low band leaks
  // through the spline's droop near the LR Nyquist, so it is not asserted.
  for (const Waveform& x : {test::random_wave(p.hr.size(), rng), scaled(speech_pair(12).hr, -2.0)}) {
    const Waveform r = repaint(x, p.inp, 2, FilterKind::chebyshev);
    CHECK(lsd_band(x, r, 1.2 * kLrNyquist, 8000.0) < 0.3);
  }
  CHECK_THROWS_AS(repaint(test::random_wave(10, rng), p.inp, 2, FilterKind::chebyshev), InvalidArgument);
}

TEST_CASE("noise-free reverse loop with an oracle network recovers the reference") {
  for (auto kind : {FilterKind::chebyshev, FilterKind::bessel}) {
    const Waveform hr = synth_utterance(1.0, 16000, 21);
    const Waveform inp = simulate_lr(hr, 2, kind).inp;
    int calls = 0;
    auto predict = [](const Waveform& x) { return x; };
    auto denoise = [&](const Waveform&, const Waveform&, const Waveform&, int step) {
      CHECK(step >= 0);
      CHECK(step < 1000);
      ++calls;
      return hr;
    };
    std::mt19937_64 rng(4);
    const Waveform out = reverse_from_input(inp, predict, denoise, kSched, {2, kind, true}, rng);
    CHECK(calls == 10);
    CHECK(lsd_band(hr, out, 0.0, 0.8 * kLrNyquist) < 0.3);
    CHECK(lsd_band(hr, out, 1.2 * kLrNyquist, 8000.0) < 0.3);
  }
}

TEST_CASE("reverse inference shape and determinism") {
  SrModel model(DparnConfig::tiny(), ArcnConfig::tiny(), 5);
  const Waveform hr = synth_utterance(0.05, 16000, 3);
  const Waveform lr = simulate_lr(hr, 2, FilterKind::chebyshev).lr;
  NoiseSchedule sched;
  sched.inference_steps = 4;
  std::mt19937_64 r1(9), r2(9), r3(10);
  const Waveform a = reverse_infer(lr, model, sched, {}, r1);
  const Waveform b = reverse_infer(lr, model, sched, {}, r2);
  const Waveform c = reverse_infer(lr, model, sched, {}, r3);
  CHECK(a.size() == 2 * lr.size());
  CHECK(a.sample_rate == 16000);
  CHECK(a.samples == b.samples);
  CHECK(a.samples != c.samples);
  for (double v : a.samples) CHECK(std::isfinite(v));
}

TEST_CASE("training loss reduces in closed form for identity networks") {
  SrModel model(DparnConfig::tiny(), ArcnConfig::tiny(), 6);
  for (auto* l : {&model.dparn.output_proj()}) {
    for (double& v : l->weight.mutable_data()) v = 0.0;
    for (double& v : l->bias.mutable_data()) v = 0.0;
  }
  for (double& v : model.arcn.output_conv().weight.mutable_data()) v = 0.0;
  for (double& v : model.arcn.output_conv().bias.mutable_data()) v = 0.0;

  const Waveform hr = synth_utterance(0.05, 16000, 4);
  const Waveform inp = simulate_lr(hr, 2, FilterKind::chebyshev).inp;
  std::mt19937_64 rng(7);
  const Waveform z = test::random_wave(hr.size(), rng);
  const ArcnConfig& ac = model.arcn.config();
  const FrameConfig fc = ac.stft;
  for (int k : {1, 250, 1000}) {
    const ExampleLoss l = example_loss(model, hr, inp, hr.size(), 2, k, z, kSched);
    const Spectrogram sp = stft(inp, fc), sr = stft(hr, fc);
    const double lp = loss_pred(sp, sr, std::vector<std::uint8_t>(static_cast<std::size_t>(sp.frames), 1));
    const TfLoss d = loss_tf(inp, hr, std::vector<std::uint8_t>(hr.size(), 1), fc);
    const double lam = lambda_weight(k / 1000.0);
    CHECK(std::fabs(l.report.l_pred - lp) < 1e-12);
    CHECK(std::fabs(l.report.l_diff - d.l_diff) < 1e-12);
    CHECK(l.report.lambda_weight == lam);
    CHECK(std::fabs(l.total.item() - (lp + lam * d.l_diff)) < 1e-12);
  }
}

TEST_CASE("training loss on a toy batch is finite with finite gradients") {
  SrModel model(DparnConfig::tiny(), ArcnConfig::tiny(), 8);
  std::mt19937_64 rng(8);
  for (std::uint64_t seed : {1u, 2u}) {
    const Waveform hr = synth_utterance(0.04, 16000, seed);
    const Waveform inp = simulate_lr(hr, 2, FilterKind::bessel).inp;
    const Waveform z = test::random_wave(hr.size(), rng);
    const ExampleLoss l = example_loss(model, hr, inp, hr.size() - 37, 2, 400, z, kSched);
    CHECK(std::isfinite(l.total.item()));
    backward(l.total);
  }
  for (const auto& p : model.params.items()) {
    if (!p.tensor.has_grad()) continue;
    for (double g : p.tensor.grad()) CHECK(std::isfinite(g));
  }
}

TEST_CASE("schedule dump") {
  std::ostringstream os;
  write_schedule_csv(os, kSched);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "t,sigma,decay");
  int rows = 0;
  std::string last;
  while (std::getline(is, line)) {
    if (rows == 0) CHECK(line == "0,0,1");
    last = line;
    ++rows;
  }
  CHECK(rows == 1001);
  const double s1 = std::stod(last.substr(last.find(',') + 1));
  CHECK(std::fabs(s1 - 0.38898265820667519786) < 1e-12);
}
