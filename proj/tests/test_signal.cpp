#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ssr/error.hpp"
#include "ssr/signal.hpp"
#include "support.hpp"

using namespace ssr;

namespace {

double interior_rel_error(const Waveform& a, const Waveform& b, std::size_t margin) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = margin; i + margin < a.size(); ++i) {
    num += (a.samples[i] - b.samples[i]) * (a.samples[i] - b.samples[i]);
    den += a.samples[i] * a.samples[i];
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_CASE("hann window closed form") {
  const auto w4 = hann_window(4);
  CHECK(w4[0] == 0.0);
  CHECK(w4[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(w4[2] == 1.0);
  CHECK(w4[3] == doctest::Approx(0.5).epsilon(1e-15));
  const auto w2 = hann_window(2);
  CHECK(w2[0] == 0.0);
  CHECK(w2[1] == 1.0);
  const auto w512 = hann_window(512);
  CHECK(w512[0] == 0.0);
  CHECK(w512[256] == 1.0);
  CHECK_THROWS_AS(hann_window(1), InvalidArgument);
}

TEST_CASE("frame config converts milliseconds to samples") {
  FrameConfig c;
  CHECK(c.frame_len(16000) == 512);
  CHECK(c.hop(16000) == 128);
  CHECK_THROWS_AS((FrameConfig{31.99, 8.0}.frame_len(16000)), InvalidArgument);
}

TEST_CASE("stft shapes and zero input") {
  Waveform z(std::vector<double>(16000, 0.0), 16000);
  const auto s = stft(z, FrameConfig{});
  CHECK(s.bins == 257);
  CHECK(s.frames == stft_frame_count(16000, 512, 128));
  CHECK(s.frames == (16000 + 384 + 127) / 128);
  for (const auto& v : s.values) CHECK(std::abs(v) == 0.0);
  CHECK_THROWS_AS(stft(Waveform{}, FrameConfig{}), InvalidArgument);
}

TEST_CASE("stft matches a direct DFT of each windowed frame") {
  std::mt19937_64 rng(11);
  const Waveform w = test::random_wave(900, rng);
  const int n = 64, hop = 16, pad = n - hop;
  const auto s = stft(w.samples, n, hop, 16000);
  const auto win = hann_window(n);
  double worst = 0.0;
  for (int t = 0; t < s.frames; ++t) {
    for (int f = 0; f < s.bins; ++f) {
      std::complex<long double> acc = 0.0L;
      for (int k = 0; k < n; ++k) {
        const long idx = static_cast<long>(t) * hop - pad + k;
        if (idx < 0 || idx >= static_cast<long>(w.size())) continue;
        const long double ang = -2.0L * std::numbers::pi_v<long double> * f * k / n;
        acc += static_cast<long double>(w.samples[idx] * win[k]) *
               std::complex<long double>(std::cos(ang), std::sin(ang));
      }
      const std::complex<double> ref(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
      worst = std::max(worst, std::abs(ref - s.at(t, f)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("1 kHz cosine peaks at bin 32") {
  Waveform w(std::vector<double>(16000), 16000);
  for (std::size_t i = 0; i < w.size(); ++i) w.samples[i] = std::cos(2.0 * std::numbers::pi * 1000.0 * i / 16000.0);
  const auto s = stft(w, FrameConfig{});
  for (int t = 4; t < s.frames - 4; ++t) {
    int best = 0;
    for (int f = 1; f < s.bins; ++f) {
      if (std::abs(s.at(t, f)) > std::abs(s.at(t, best))) best = f;
    }
    CHECK(best == 32);
  }
}

TEST_CASE("impulse at sample 0 gives a flat spectrum scaled by the window") {
  Waveform w(std::vector<double>(2048, 0.0), 16000);
  w.samples[0] = 1.0;
  const auto s = stft(w, FrameConfig{});
  const auto win = hann_window(512);
  // Sample 0 sits at position pad = 384 of frame 0.
  for (int f = 0; f < s.bins; ++f) CHECK(std::abs(s.at(0, f)) == doctest::Approx(win[384]).epsilon(1e-12));
}

TEST_CASE("stft/istft round trip and truncation") {
  std::mt19937_64 rng(3);
  const Waveform w = test::random_wave(16000, rng);
  const auto s = stft(w, FrameConfig{});
  const Waveform r = istft(s, w.size());
  REQUIRE(r.size() == w.size());
  CHECK(interior_rel_error(w, r, 256) < 1e-6);
  CHECK(test::max_abs_diff(w.samples, r.samples) < 1e-12);

  Waveform ramp(std::vector<double>(3000), 16000);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp.samples[i] = static_cast<double>(i) / 3000.0;
  const Waveform pre = istft(stft(ramp, FrameConfig{}), 1000);
  REQUIRE(pre.size() == 1000);
  for (std::size_t i = 0; i < 1000; ++i) CHECK(pre.samples[i] == doctest::Approx(ramp.samples[i]).epsilon(1e-12));

  Spectrogram zero = s;
  for (auto& v : zero.values) v = 0.0;
  for (double v : istft(zero, w.size()).samples) CHECK(v == 0.0);
  CHECK_THROWS_AS(istft(s, istft_max_length(s.frames, s.frame_len, s.hop) + 1), InvalidArgument);
}

TEST_CASE("stft is linear and energy-consistent with the windowed frames") {
  std::mt19937_64 rng(5);
  const Waveform a = test::random_wave(4000, rng), b = test::random_wave(4000, rng);
  Waveform mix(std::vector<double>(4000), 16000);
  for (std::size_t i = 0; i < 4000; ++i) mix.samples[i] = 0.3 * a.samples[i] - 2.0 * b.samples[i];
  const auto sa = stft(a, FrameConfig{}), sb = stft(b, FrameConfig{}), sm = stft(mix, FrameConfig{});
  double worst = 0.0;
  for (std::size_t i = 0; i < sm.values.size(); ++i) {
    worst = std::max(worst, std::abs(sm.values[i] - (0.3 * sa.values[i] - 2.0 * sb.values[i])));
  }
  CHECK(worst < 1e-11);

  // Parseval for a real frame of even length n: sum|x|^2 = (|X0|^2 + |X_{n/2}|^2 + 2 sum_mid |Xf|^2) / n.
  const auto win = hann_window(512);
  double spec_energy = 0.0, frame_energy = 0.0;
  for (int t = 0; t < sa.frames; ++t) {
    for (int f = 0; f < sa.bins; ++f) {
      const double e = std::norm(sa.at(t, f));
      spec_energy += (f == 0 || f == 256) ? e : 2.0 * e;
    }
    for (int k = 0; k < 512; ++k) {
      const long idx = static_cast<long>(t) * 128 - 384 + k;
      if (idx >= 0 && idx < 4000) frame_energy += std::pow(a.samples[idx] * win[k], 2.0);
    }
  }
  CHECK(std::fabs(spec_energy / 512.0 - frame_energy) / frame_energy < 1e-6);
}

TEST_CASE("normalize") {
  auto n1 = normalize(Waveform({1.0, -1.0}, 16000));
  CHECK(n1.wave.samples == std::vector<double>{1.0, -1.0});
  CHECK(n1.mean == 0.0);
  CHECK(n1.std == 1.0);
  auto n2 = normalize(Waveform({2.0, 4.0}, 16000));
  CHECK(n2.wave.samples == std::vector<double>{-1.0, 1.0});
  CHECK(n2.mean == 3.0);
  CHECK(n2.std == 1.0);
  CHECK_THROWS_AS(normalize(Waveform({5.0, 5.0, 5.0}, 16000)), DegenerateInput);

  std::mt19937_64 rng(9);
  Waveform r = test::random_wave(1001, rng);
  for (double& v : r.samples) v = 3.0 * v + 7.0;
  const auto n = normalize(r);
  double m = 0.0, v = 0.0;
  for (double x : n.wave.samples) m += x;
  m /= 1001.0;
  for (double x : n.wave.samples) v += (x - m) * (x - m);
  CHECK(std::fabs(m) < 1e-9);
  CHECK(std::fabs(std::sqrt(v / 1001.0) - 1.0) < 1e-9);
}
