#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ssr/signal.hpp"

namespace ssr {

/// One second-order section, H(z) = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2).
/// First-order sections use b2 = a2 = 0.
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

struct IirFilter {
  std::vector<Biquad> sections;
  double gain = 1.0;

  /// Complex response at normalized frequency `w` (fraction of Nyquist).
  std::complex<double> response(double w) const;
  /// All poles of the cascade.
  std::vector<std::complex<double>> poles() const;
  bool stable() const;
};

enum class FilterKind { chebyshev, bessel };

FilterKind parse_filter_kind(std::string_view name);
std::string_view to_string(FilterKind kind);

/// Ripple used when simulating low-resolution input with the Chebyshev filter.
inline constexpr double kChebyshevRippleDb = 0.05;
inline constexpr int kChebyshevOrder = 8;
inline constexpr int kBesselOrder = 5;

/// Chebyshev type I lowpass, bilinear transform with pre-warping; the passband
/// edge (end of the ripple band) sits at `cutoff_norm` of Nyquist.
IirFilter design_cheby1_lowpass(int order, double ripple_db, double cutoff_norm);

/// Bessel lowpass normalized so that `cutoff_norm` is the -3 dB point.
IirFilter design_bessel_lowpass(int order, double cutoff_norm);

/// The filter used for a given LR simulation: cutoff at the LR Nyquist.
IirFilter design_simulation_filter(FilterKind kind, int ratio);

/// Causal direct-form-II-transposed filtering from zero state.
Waveform iir_apply(const IirFilter& f, const Waveform& w);

/// Forward-backward filtering with odd-extension edge padding. Zero phase,
/// squared magnitude.
Waveform iir_apply_zero_phase(const IirFilter& f, const Waveform& w);

Waveform decimate(const Waveform& w, int ratio);

/// Natural cubic spline through the samples, evaluated on a grid `ratio` times
/// finer. Output length is len * ratio.
Waveform cubic_spline_upsample(const Waveform& w, int ratio);

struct LowResPair {
  Waveform lr;   ///< at hr.sample_rate / ratio
  Waveform inp;  ///< spline-upsampled back to hr length and rate
};

LowResPair simulate_lr(const Waveform& hr, int ratio, FilterKind kind);

/// Upsample(Downsample(Filtering(w))): the operator repainting relies on.
Waveform resample_chain(const Waveform& w, int ratio, FilterKind kind);

/// Binary T x F mask, 1 where the bin center lies strictly above the LR
/// Nyquist frequency.
struct Lossmap {
  int frames = 0;
  int bins = 0;
  std::vector<std::uint8_t> mask;

  std::uint8_t at(int t, int f) const { return mask[static_cast<std::size_t>(t) * bins + f]; }
};

Lossmap build_lossmap(int frames, int bins, int ratio, int frame_len, int sample_rate);

}  // namespace ssr
