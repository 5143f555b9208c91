#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ssr {

/// Mono time-domain signal. Amplitudes are dimensionless, nominally in [-1, 1]
/// before normalization.
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 16000;

  Waveform() = default;
  Waveform(std::vector<double> s, int rate) : samples(std::move(s)), sample_rate(rate) {}

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  double duration_s() const { return static_cast<double>(samples.size()) / sample_rate; }
};

/// Analysis framing in milliseconds; converted to samples per sample rate.
struct FrameConfig {
  double frame_ms = 32.0;
  double hop_ms = 8.0;

  int frame_len(int sample_rate) const;
  int hop(int sample_rate) const;
};

/// Complex STFT, frames x bins, row-major by frame.
struct Spectrogram {
  int frames = 0;
  int bins = 0;
  int frame_len = 0;
  int hop = 0;
  int sample_rate = 0;
  std::vector<std::complex<double>> values;

  std::complex<double>& at(int t, int f) { return values[static_cast<std::size_t>(t) * bins + f]; }
  const std::complex<double>& at(int t, int f) const {
    return values[static_cast<std::size_t>(t) * bins + f];
  }
};

/// Periodic Hann window, w[k] = 0.5 (1 - cos(2 pi k / n)).
std::vector<double> hann_window(int n);

/// Number of frames produced for `n` samples: ceil((n + pad) / hop) where
/// pad = frame_len - hop is applied at both ends.
int stft_frame_count(std::size_t n, int frame_len, int hop);

/// Longest signal an STFT with `frames` frames can resynthesize.
std::size_t istft_max_length(int frames, int frame_len, int hop);

Spectrogram stft(const Waveform& w, const FrameConfig& cfg);
Spectrogram stft(std::span<const double> x, int frame_len, int hop, int sample_rate);

/// Weighted overlap-add with squared-window normalization, truncated to
/// `target_len` samples.
Waveform istft(const Spectrogram& s, std::size_t target_len);

struct Normalized {
  Waveform wave;
  double mean = 0.0;
  double std = 1.0;
};

/// Zero mean, unit population standard deviation. Throws DegenerateInput on
/// constant signals.
Normalized normalize(const Waveform& w);

}  // namespace ssr
