#include "ssr/signal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "ssr/error.hpp"

namespace ssr {
namespace {

int ms_to_samples(double ms, int rate, const char* what) {
  const double exact = ms * rate / 1000.0;
  const double rounded = std::round(exact);
  if (rate <= 0 || rounded < 1.0 || std::abs(exact - rounded) > 1e-9) {
    throw InvalidArgument(std::string(what) + " of " + std::to_string(ms) +
                          " ms is not an integer sample count at " + std::to_string(rate) + " Hz");
  }
  return static_cast<int>(rounded);
}

void check_framing(int frame_len, int hop) {
  if (frame_len < 2 || hop < 1 || hop >= frame_len) {
    throw InvalidArgument("stft: need frame_len >= 2 and 1 <= hop < frame_len");
  }
}

}  // namespace

int FrameConfig::frame_len(int sample_rate) const {
  return ms_to_samples(frame_ms, sample_rate, "frame");
}

int FrameConfig::hop(int sample_rate) const {
  const int h = ms_to_samples(hop_ms, sample_rate, "hop");
  if (h >= frame_len(sample_rate)) throw InvalidArgument("hop must be shorter than the frame");
  return h;
}

std::vector<double> hann_window(int n) {
  if (n < 2) throw InvalidArgument("hann_window: n must be >= 2");
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    w[k] = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * k / n));
  }
  return w;
}

int stft_frame_count(std::size_t n, int frame_len, int hop) {
  const std::size_t pad = static_cast<std::size_t>(frame_len - hop);
  return static_cast<int>((n + pad + hop - 1) / hop);
}

std::size_t istft_max_length(int frames, int frame_len, int hop) {
  const long long len = static_cast<long long>(frames) * hop - (frame_len - hop);
  return len > 0 ? static_cast<std::size_t>(len) : 0;
}

Spectrogram stft(const Waveform& w, const FrameConfig& cfg) {
  return stft(w.samples, cfg.frame_len(w.sample_rate), cfg.hop(w.sample_rate), w.sample_rate);
}

Spectrogram stft(std::span<const double> x, int frame_len, int hop, int sample_rate) {
  check_framing(frame_len, hop);
  if (x.empty()) throw InvalidArgument("stft: empty waveform");
  const auto window = hann_window(frame_len);
  const long long pad = frame_len - hop;
  const long long n = static_cast<long long>(x.size());

  Spectrogram s;
  s.frames = stft_frame_count(x.size(), frame_len, hop);
  s.bins = frame_len / 2 + 1;
  s.frame_len = frame_len;
  s.hop = hop;
  s.sample_rate = sample_rate;
  s.values.assign(static_cast<std::size_t>(s.frames) * s.bins, {});

  std::vector<double> frame(static_cast<std::size_t>(frame_len));
  for (int t = 0; t < s.frames; ++t) {
    const long long start = static_cast<long long>(t) * hop - pad;
    for (int k = 0; k < frame_len; ++k) {
      const long long i = start + k;
      frame[k] = (i >= 0 && i < n) ? x[static_cast<std::size_t>(i)] * window[k] : 0.0;
    }
    detail::rfft(frame, std::span(s.values).subspan(static_cast<std::size_t>(t) * s.bins, s.bins));
  }
  return s;
}

Waveform istft(const Spectrogram& s, std::size_t target_len) {
  check_framing(s.frame_len, s.hop);
  if (s.bins != s.frame_len / 2 + 1) throw InvalidArgument("istft: bins inconsistent with frame_len");
  if (target_len > istft_max_length(s.frames, s.frame_len, s.hop)) {
    throw InvalidArgument("istft: target length exceeds synthesizable length");
  }
  const auto window = hann_window(s.frame_len);
  const long long pad = s.frame_len - s.hop;
  const long long n = static_cast<long long>(target_len);

  std::vector<double> out(target_len, 0.0);
  std::vector<double> norm(target_len, 0.0);
  std::vector<double> frame(static_cast<std::size_t>(s.frame_len));
  const double scale = 1.0 / s.frame_len;
  for (int t = 0; t < s.frames; ++t) {
    const long long start = static_cast<long long>(t) * s.hop - pad;
    if (start >= n) break;
    detail::irfft_unnormalized(
        std::span(s.values).subspan(static_cast<std::size_t>(t) * s.bins, s.bins), frame);
    for (int k = 0; k < s.frame_len; ++k) {
      const long long i = start + k;
      if (i < 0 || i >= n) continue;
      out[i] += window[k] * frame[k] * scale;
      norm[i] += window[k] * window[k];
    }
  }
  for (std::size_t i = 0; i < target_len; ++i) {
    if (norm[i] <= 0.0) throw InternalError("istft: zero overlap-add normalization");
    out[i] /= norm[i];
  }
  return Waveform(std::move(out), s.sample_rate);
}

Normalized normalize(const Waveform& w) {
  if (w.size() < 2) throw InvalidArgument("normalize: need at least 2 samples");
  const double n = static_cast<double>(w.size());
  double mean = 0.0;
  for (double v : w.samples) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : w.samples) var += (v - mean) * (v - mean);
  var /= n;
  const double sd = std::sqrt(var);
  if (!(sd > 0.0)) throw DegenerateInput("normalize: constant signal has zero variance");
  Normalized r{Waveform({}, w.sample_rate), mean, sd};
  r.wave.samples.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r.wave.samples[i] = (w.samples[i] - mean) / sd;
  return r;
}

}  // namespace ssr
