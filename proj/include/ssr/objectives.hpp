#pragma once

#include <cstdint>
#include <span>

#include "ssr/signal.hpp"
#include "ssr/tensor.hpp"

namespace ssr {

inline constexpr double kTimeLossWeight = 0.85;  ///< alpha in l_diff
inline constexpr double kLambdaMax = 100.0;
inline constexpr double kMagnitudeFloor = 1e-8;
inline constexpr double kSisnrCapDb = 100.0;

struct LossReport {
  double l_pred = 0.0;
  double l_time = 0.0;
  double l_freq = 0.0;
  double l_diff = 0.0;
  double lambda_weight = 0.0;
  double total = 0.0;
};

struct MetricReport {
  double sisnr_db = 0.0;
  double lsd_db = 0.0;
};

/// 1 / (e^t - 1) clamped to kLambdaMax; t > 0.
double lambda_weight(double t);

/// alpha * l_time + (1 - alpha) * l_freq
double combine_diff(double l_time, double l_freq);

// Differentiable losses. Spectrograms are [2, T, F] tensors; the first
// `valid_frames` frames are averaged, later ones are padding.

/// mean over valid cells of | |P| - |S| | + |P_r - S_r| + |P_i - S_i|
Tensor loss_pred(const Tensor& spec_pred, const Tensor& spec_ref, int valid_frames);

struct DiffLoss {
  Tensor l_time, l_freq, l_diff;
};

/// Time-domain L1 over the first `valid_len` samples plus magnitude L1 over
/// the frames covering them.
DiffLoss loss_tf(const Tensor& est, const Tensor& ref, int valid_len, int frame_len, int hop);

// Plain evaluations of the same definitions.

double loss_pred(const Spectrogram& pred, const Spectrogram& ref,
                 std::span<const std::uint8_t> frame_mask);
struct TfLoss {
  double l_time = 0.0, l_freq = 0.0, l_diff = 0.0;
};
TfLoss loss_tf(const Waveform& est, const Waveform& ref, std::span<const std::uint8_t> sample_mask,
               const FrameConfig& frames);

/// Projection SI-SNR in dB on zero-mean copies, capped at kSisnrCapDb.
double sisnr(const Waveform& est, const Waveform& ref);

/// Frame-averaged RMS of log10(|S|^2 / |S_hat|^2) over bins [bin_begin, bin_end).
double lsd(const Spectrogram& ref, const Spectrogram& est, int bin_begin, int bin_end);
double lsd(const Spectrogram& ref, const Spectrogram& est);
/// LSD of the two waveforms' STFTs (32 ms / 8 ms framing by default).
double lsd(const Waveform& ref, const Waveform& est, const FrameConfig& frames = {});
/// LSD restricted to [lo_hz, hi_hz).
double lsd_band(const Waveform& ref, const Waveform& est, double lo_hz, double hi_hz,
                const FrameConfig& frames = {});

MetricReport measure(const Waveform& est, const Waveform& ref);

}  // namespace ssr
