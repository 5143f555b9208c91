#include "ssr/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ssr/error.hpp"

namespace ssr {

namespace {

Tensor frame_mask_tensor(int frames, int bins, int valid_frames) {
  std::vector<double> m(static_cast<std::size_t>(frames) * bins, 0.0);
  std::fill_n(m.begin(), static_cast<std::size_t>(valid_frames) * bins, 1.0);
  return Tensor::from({frames, bins}, std::move(m));
}

std::size_t prefix_length(std::span<const std::uint8_t> mask) {
  std::size_t n = 0;
  while (n < mask.size() && mask[n]) ++n;
  for (std::size_t i = n; i < mask.size(); ++i) {
    if (mask[i]) throw InvalidArgument("mask must mark a contiguous prefix");
  }
  return n;
}

void check_same(const Spectrogram& a, const Spectrogram& b, const char* what) {
  if (a.frames != b.frames || a.bins != b.bins) {
    throw InvalidArgument(std::string(what) + ": spectrogram shapes differ");
  }
}

}  // namespace

double lambda_weight(double t) {
  if (!(t > 0.0)) throw InvalidArgument("lambda_weight: t must be positive");
  return std::min(1.0 / std::expm1(t), kLambdaMax);
}

double combine_diff(double l_time, double l_freq) {
  return kTimeLossWeight * l_time + (1.0 - kTimeLossWeight) * l_freq;
}

Tensor loss_pred(const Tensor& spec_pred, const Tensor& spec_ref, int valid_frames) {
  if (spec_pred.shape() != spec_ref.shape() || spec_pred.rank() != 3 || spec_pred.dim(0) != 2) {
    throw InvalidArgument("loss_pred: expected matching [2, T, F] spectrograms");
  }
  const int t = spec_pred.dim(1), f = spec_pred.dim(2);
  if (valid_frames < 1 || valid_frames > t) throw InvalidArgument("loss_pred: bad valid frame count");
  Tensor mag = abs(sub(complex_abs(spec_pred), complex_abs(spec_ref)));
  Tensor diff = abs(sub(spec_pred, spec_ref));
  Tensor cell = add(mag, add(reshape(slice0(diff, 0, 1), {t, f}), reshape(slice0(diff, 1, 2), {t, f})));
  if (valid_frames == t) return mean(cell);
  return scale(sum(mul(cell, frame_mask_tensor(t, f, valid_frames))),
               1.0 / (static_cast<double>(valid_frames) * f));
}

DiffLoss loss_tf(const Tensor& est, const Tensor& ref, int valid_len, int frame_len, int hop) {
  if (est.shape() != ref.shape() || est.rank() != 1) {
    throw InvalidArgument("loss_tf: expected equal-length waveforms");
  }
  if (valid_len < 1 || valid_len > est.dim(0)) throw InvalidArgument("loss_tf: bad valid length");
  Tensor e = valid_len == est.dim(0) ? est : slice_last(est, 0, valid_len);
  Tensor r = valid_len == ref.dim(0) ? ref : slice_last(ref, 0, valid_len);
  DiffLoss out;
  out.l_time = mean(abs(sub(e, r)));
  out.l_freq =
      mean(abs(sub(complex_abs(stft(e, frame_len, hop)), complex_abs(stft(r, frame_len, hop)))));
  out.l_diff = add(scale(out.l_time, kTimeLossWeight), scale(out.l_freq, 1.0 - kTimeLossWeight));
  return out;
}

double loss_pred(const Spectrogram& pred, const Spectrogram& ref,
                 std::span<const std::uint8_t> frame_mask) {
  check_same(pred, ref, "loss_pred");
  if (frame_mask.size() != static_cast<std::size_t>(pred.frames)) {
    throw InvalidArgument("loss_pred: frame mask length differs from frame count");
  }
  double acc = 0.0;
  std::size_t cells = 0;
  for (int t = 0; t < pred.frames; ++t) {
    if (!frame_mask[t]) continue;
    for (int f = 0; f < pred.bins; ++f) {
      const auto p = pred.at(t, f), s = ref.at(t, f);
      acc += std::fabs(std::abs(p) - std::abs(s)) + std::fabs(p.real() - s.real()) +
             std::fabs(p.imag() - s.imag());
      ++cells;
    }
  }
  if (cells == 0) throw InvalidArgument("loss_pred: no valid frames");
  return acc / static_cast<double>(cells);
}

TfLoss loss_tf(const Waveform& est, const Waveform& ref, std::span<const std::uint8_t> sample_mask,
               const FrameConfig& frames) {
  if (est.size() != ref.size() || sample_mask.size() != est.size()) {
    throw InvalidArgument("loss_tf: length mismatch");
  }
  const std::size_t n = prefix_length(sample_mask);
  if (n == 0) throw InvalidArgument("loss_tf: no valid samples");
  TfLoss out;
  for (std::size_t i = 0; i < n; ++i) out.l_time += std::fabs(est.samples[i] - ref.samples[i]);
  out.l_time /= static_cast<double>(n);
  const int fl = frames.frame_len(est.sample_rate), hop = frames.hop(est.sample_rate);
  auto se = stft(std::span<const double>(est.samples.data(), n), fl, hop, est.sample_rate);
  auto sr = stft(std::span<const double>(ref.samples.data(), n), fl, hop, ref.sample_rate);
  double acc = 0.0;
  for (std::size_t i = 0; i < se.values.size(); ++i) {
    acc += std::fabs(std::abs(se.values[i]) - std::abs(sr.values[i]));
  }
  out.l_freq = acc / static_cast<double>(se.values.size());
  out.l_diff = combine_diff(out.l_time, out.l_freq);
  return out;
}

double sisnr(const Waveform& est, const Waveform& ref) {
  if (est.size() != ref.size() || est.empty()) throw InvalidArgument("sisnr: length mismatch");
  const double n = static_cast<double>(est.size());
  double me = 0.0, mr = 0.0;
  for (std::size_t i = 0; i < est.size(); ++i) {
    me += est.samples[i];
    mr += ref.samples[i];
  }
  me /= n;
  mr /= n;
  double dot = 0.0, rr = 0.0;
  for (std::size_t i = 0; i < est.size(); ++i) {
    const double e = est.samples[i] - me, r = ref.samples[i] - mr;
    dot += e * r;
    rr += r * r;
  }
  if (rr == 0.0) throw InvalidArgument("sisnr: reference has no energy");
  const double a = dot / rr;
  double target = 0.0, noise = 0.0;
  for (std::size_t i = 0; i < est.size(); ++i) {
    const double r = a * (ref.samples[i] - mr);
    const double e = (est.samples[i] - me) - r;
    target += r * r;
    noise += e * e;
  }
  if (noise == 0.0) return kSisnrCapDb;
  if (target == 0.0) return -kSisnrCapDb;
  return std::clamp(10.0 * std::log10(target / noise), -kSisnrCapDb, kSisnrCapDb);
}

double lsd(const Spectrogram& ref, const Spectrogram& est, int bin_begin, int bin_end) {
  check_same(ref, est, "lsd");
  if (bin_begin < 0 || bin_end > ref.bins || bin_begin >= bin_end || ref.frames == 0) {
    throw InvalidArgument("lsd: empty bin range");
  }
  double total = 0.0;
  for (int t = 0; t < ref.frames; ++t) {
    double acc = 0.0;
    for (int f = bin_begin; f < bin_end; ++f) {
      const double a = std::max(std::abs(ref.at(t, f)), kMagnitudeFloor);
      const double b = std::max(std::abs(est.at(t, f)), kMagnitudeFloor);
      const double d = 2.0 * std::log10(a / b);
      acc += d * d;
    }
    total += std::sqrt(acc / (bin_end - bin_begin));
  }
  return total / ref.frames;
}

double lsd(const Spectrogram& ref, const Spectrogram& est) { return lsd(ref, est, 0, ref.bins); }

double lsd(const Waveform& ref, const Waveform& est, const FrameConfig& frames) {
  if (ref.size() != est.size()) throw InvalidArgument("lsd: length mismatch");
  return lsd(stft(ref, frames), stft(est, frames));
}

double lsd_band(const Waveform& ref, const Waveform& est, double lo_hz, double hi_hz,
                const FrameConfig& frames) {
  if (ref.size() != est.size()) throw InvalidArgument("lsd_band: length mismatch");
  const auto a = stft(ref, frames), b = stft(est, frames);
  const double bin_hz = static_cast<double>(ref.sample_rate) / a.frame_len;
  const int begin = std::max(0, static_cast<int>(std::ceil(lo_hz / bin_hz)));
  const int end = std::min(a.bins, static_cast<int>(std::ceil(hi_hz / bin_hz)));
  return lsd(a, b, begin, end);
}

MetricReport measure(const Waveform& est, const Waveform& ref) {
  return MetricReport{sisnr(est, ref), lsd(ref, est)};
}

}  // namespace ssr
