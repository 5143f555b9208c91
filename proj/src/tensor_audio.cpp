#include <complex>

#include "fft.hpp"
#include "ssr/error.hpp"
#include "ssr/signal.hpp"
#include "ssr/tensor.hpp"

namespace ssr {

using detail::make_result;
using detail::Node;

namespace {

void check_frame(int frame_len, int hop) {
  if (frame_len < 2 || frame_len % 2 != 0 || hop < 1 || hop >= frame_len) {
    throw InvalidArgument("stft: need an even frame_len and 1 <= hop < frame_len");
  }
}

}  // namespace

Tensor stft(const Tensor& x, int frame_len, int hop) {
  check_frame(frame_len, hop);
  if (x.rank() != 1 || x.numel() == 0) throw InvalidArgument("stft: expected a non-empty [N] tensor");
  const Spectrogram s = stft(x.data(), frame_len, hop, 1);
  const int frames = s.frames, bins = s.bins;
  const std::size_t plane = static_cast<std::size_t>(frames) * bins;
  std::vector<double> out(2 * plane);
  for (std::size_t i = 0; i < plane; ++i) {
    out[i] = s.values[i].real();
    out[plane + i] = s.values[i].imag();
  }
  const long long n = static_cast<long long>(x.numel());
  return make_result({2, frames, bins}, std::move(out), {x}, [=](Node& self) {
    // Adjoint: each frame receives Re(sum_f G[f] e^{+i 2 pi f k / L}) times the window.
    const auto window = hann_window(frame_len);
    const long long pad = frame_len - hop;
    auto& g = self.parents[0]->ensure_grad();
    std::vector<std::complex<double>> spec(static_cast<std::size_t>(bins));
    std::vector<double> frame(static_cast<std::size_t>(frame_len));
    for (int t = 0; t < frames; ++t) {
      for (int f = 0; f < bins; ++f) {
        const double gr = self.grad[static_cast<std::size_t>(t) * bins + f];
        const double gi = self.grad[plane + static_cast<std::size_t>(t) * bins + f];
        spec[f] = (f == 0 || f == bins - 1) ? std::complex<double>(gr, 0.0)
                                            : 0.5 * std::complex<double>(gr, gi);
      }
      detail::irfft_unnormalized(spec, frame);
      const long long start = static_cast<long long>(t) * hop - pad;
      for (int k = 0; k < frame_len; ++k) {
        const long long i = start + k;
        if (i >= 0 && i < n) g[static_cast<std::size_t>(i)] += window[k] * frame[k];
      }
    }
  });
}

Tensor istft(const Tensor& spec, int frame_len, int hop, int length) {
  check_frame(frame_len, hop);
  if (spec.rank() != 3 || spec.dim(0) != 2 || spec.dim(2) != frame_len / 2 + 1) {
    throw InvalidArgument("istft: expected [2, T, frame_len/2 + 1], got " + shape_str(spec.shape()));
  }
  const int frames = spec.dim(1), bins = spec.dim(2);
  if (length < 1 || static_cast<std::size_t>(length) > istft_max_length(frames, frame_len, hop)) {
    throw InvalidArgument("istft: length exceeds synthesizable length");
  }
  const std::size_t plane = static_cast<std::size_t>(frames) * bins;
  Spectrogram s;
  s.frames = frames;
  s.bins = bins;
  s.frame_len = frame_len;
  s.hop = hop;
  s.sample_rate = 1;
  s.values.resize(plane);
  auto d = spec.data();
  for (std::size_t i = 0; i < plane; ++i) s.values[i] = {d[i], d[plane + i]};
  Waveform w = istft(s, static_cast<std::size_t>(length));

  return make_result({length}, std::move(w.samples), {spec}, [=](Node& self) {
    const auto window = hann_window(frame_len);
    const long long pad = frame_len - hop;
    std::vector<double> norm(static_cast<std::size_t>(length), 0.0);
    for (int t = 0; t < frames; ++t) {
      const long long start = static_cast<long long>(t) * hop - pad;
      for (int k = 0; k < frame_len; ++k) {
        const long long i = start + k;
        if (i >= 0 && i < length) norm[static_cast<std::size_t>(i)] += window[k] * window[k];
      }
    }
    auto& g = self.parents[0]->ensure_grad();
    std::vector<double> frame(static_cast<std::size_t>(frame_len));
    std::vector<std::complex<double>> r(static_cast<std::size_t>(bins));
    const double inv_len = 1.0 / frame_len;
    for (int t = 0; t < frames; ++t) {
      const long long start = static_cast<long long>(t) * hop - pad;
      for (int k = 0; k < frame_len; ++k) {
        const long long i = start + k;
        frame[k] = (i >= 0 && i < length) ? window[k] * self.grad[static_cast<std::size_t>(i)] /
                                                norm[static_cast<std::size_t>(i)]
                                          : 0.0;
      }
      detail::rfft(frame, r);
      for (int f = 0; f < bins; ++f) {
        const bool edge = (f == 0 || f == bins - 1);
        const double c = (edge ? 1.0 : 2.0) * inv_len;
        g[static_cast<std::size_t>(t) * bins + f] += c * r[f].real();
        if (!edge) g[plane + static_cast<std::size_t>(t) * bins + f] += c * r[f].imag();
      }
    }
  });
}

}  // namespace ssr
