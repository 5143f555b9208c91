#include "ssr/resample.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ssr/error.hpp"

namespace ssr {
namespace {

using cplx = std::complex<double>;

void check_ratio(int ratio) {
  if (ratio < 1) throw InvalidArgument("upsampling ratio must be >= 1");
}

void check_cutoff(double cutoff_norm) {
  if (!(cutoff_norm > 0.0 && cutoff_norm < 1.0)) {
    throw InvalidArgument("cutoff must lie strictly between 0 and Nyquist");
  }
}

// Maps normalized analog poles (cutoff 1 rad/s) onto digital sections.
// All zeros land at z = -1; each section is scaled to unity DC gain and the
// overall DC gain is carried by `dc_gain`.
IirFilter bilinear_lowpass(const std::vector<cplx>& analog_poles, double cutoff_norm,
                           double dc_gain) {
  const double warped = std::tan(std::numbers::pi * cutoff_norm / 2.0);
  std::vector<cplx> upper;
  std::vector<double> real;
  for (const cplx& p : analog_poles) {
    const cplx pa = p * warped;
    const cplx z = (1.0 + pa) / (1.0 - pa);
    if (std::abs(p.imag()) < 1e-12) {
      real.push_back(z.real());
    } else if (p.imag() > 0.0) {
      upper.push_back(z);
    }
  }
  std::sort(upper.begin(), upper.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });

  IirFilter f;
  f.gain = dc_gain;
  for (double z : real) {
    const double k = (1.0 - z) / 2.0;
    f.sections.push_back({k, k, 0.0, -z, 0.0});
  }
  for (const cplx& z : upper) {
    const double a1 = -2.0 * z.real();
    const double a2 = std::norm(z);
    const double k = (1.0 + a1 + a2) / 4.0;
    f.sections.push_back({k, 2.0 * k, k, a1, a2});
  }
  if (!f.stable()) throw InternalError("filter design produced an unstable section");
  return f;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<cplx> polynomial_roots(const std::vector<double>& ascending) {
  const int n = static_cast<int>(ascending.size()) - 1;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -ascending[i] / ascending[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<cplx> roots;
  for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

Waveform run_sections(const IirFilter& f, std::vector<double> x, int rate) {
  for (const Biquad& s : f.sections) {
    double z1 = 0.0, z2 = 0.0;
    for (double& v : x) {
      const double in = v;
      const double out = s.b0 * in + z1;
      z1 = s.b1 * in - s.a1 * out + z2;
      z2 = s.b2 * in - s.a2 * out;
      v = out;
    }
  }
  for (double& v : x) v *= f.gain;
  return Waveform(std::move(x), rate);
}

}  // namespace

cplx IirFilter::response(double w) const {
  const cplx zinv = std::polar(1.0, -std::numbers::pi * w);
  cplx h = gain;
  for (const Biquad& s : sections) {
    h *= (s.b0 + zinv * (s.b1 + zinv * s.b2)) / (1.0 + zinv * (s.a1 + zinv * s.a2));
  }
  return h;
}

std::vector<cplx> IirFilter::poles() const {
  std::vector<cplx> out;
  for (const Biquad& s : sections) {
    if (s.a2 == 0.0) {
      out.emplace_back(-s.a1, 0.0);
      continue;
    }
    const cplx disc = std::sqrt(cplx(s.a1 * s.a1 - 4.0 * s.a2, 0.0));
    out.push_back((-s.a1 + disc) / 2.0);
    out.push_back((-s.a1 - disc) / 2.0);
  }
  return out;
}

bool IirFilter::stable() const {
  for (const Biquad& s : sections) {
    for (double c : {s.b0, s.b1, s.b2, s.a1, s.a2}) {
      if (!std::isfinite(c)) return false;
    }
  }
  for (const cplx& p : poles()) {
    if (!(std::abs(p) < 1.0)) return false;
  }
  return std::isfinite(gain);
}

FilterKind parse_filter_kind(std::string_view name) {
  if (name == "chebyshev") return FilterKind::chebyshev;
  if (name == "bessel") return FilterKind::bessel;
  throw InvalidArgument("unknown filter kind '" + std::string(name) + "'");
}

std::string_view to_string(FilterKind kind) {
  return kind == FilterKind::chebyshev ? "chebyshev" : "bessel";
}

IirFilter design_cheby1_lowpass(int order, double ripple_db, double cutoff_norm) {
  check_cutoff(cutoff_norm);
  if (order < 1) throw InvalidArgument("filter order must be >= 1");
  if (!(ripple_db > 0.0)) throw InvalidArgument("ripple must be positive");
  const double eps = std::sqrt(std::pow(10.0, ripple_db / 10.0) - 1.0);
  const double mu = std::asinh(1.0 / eps) / order;
  std::vector<cplx> poles;
  for (int k = 1; k <= order; ++k) {
    const double theta = std::numbers::pi * (2 * k - 1) / (2.0 * order);
    double im = std::cosh(mu) * std::cos(theta);
    if (std::abs(im) < 1e-14) im = 0.0;
    poles.emplace_back(-std::sinh(mu) * std::sin(theta), im);
  }
  // Even orders start at the bottom of the ripple band.
  const double dc = (order % 2 == 0) ? 1.0 / std::sqrt(1.0 + eps * eps) : 1.0;
  return bilinear_lowpass(poles, cutoff_norm, dc);
}

IirFilter design_bessel_lowpass(int order, double cutoff_norm) {
  check_cutoff(cutoff_norm);
  if (order < 1 || order > 12) throw InvalidArgument("bessel order must be in [1, 12]");
  // Reverse Bessel polynomial, ascending coefficients.
  std::vector<double> coeff(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= order; ++k) {
    coeff[k] = factorial(2 * order - k) /
               (std::pow(2.0, order - k) * factorial(k) * factorial(order - k));
  }
  auto mag2 = [&](double w) {
    cplx s(0.0, w), acc = 0.0;
    for (int k = order; k >= 0; --k) acc = acc * s + coeff[k];
    return coeff[0] * coeff[0] / std::norm(acc);
  };
  // Locate the -3 dB frequency of the delay-normalized prototype.
  double lo = 1e-3, hi = 1e3;
  for (int it = 0; it < 200; ++it) {
    const double mid = std::sqrt(lo * hi);
    (mag2(mid) > 0.5 ? lo : hi) = mid;
  }
  const double w3 = std::sqrt(lo * hi);
  auto poles = polynomial_roots(coeff);
  for (cplx& p : poles) {
    p /= w3;
    if (std::abs(p.imag()) < 1e-12) p = {p.real(), 0.0};
  }
  return bilinear_lowpass(poles, cutoff_norm, 1.0);
}

IirFilter design_simulation_filter(FilterKind kind, int ratio) {
  if (ratio < 2) throw InvalidArgument("simulation filter needs ratio >= 2");
  const double cutoff = 1.0 / ratio;
  return kind == FilterKind::chebyshev
             ? design_cheby1_lowpass(kChebyshevOrder, kChebyshevRippleDb, cutoff)
             : design_bessel_lowpass(kBesselOrder, cutoff);
}

Waveform iir_apply(const IirFilter& f, const Waveform& w) {
  return run_sections(f, w.samples, w.sample_rate);
}

Waveform iir_apply_zero_phase(const IirFilter& f, const Waveform& w) {
  const std::size_t n = w.size();
  if (n == 0) return w;
  const std::size_t pad = std::min<std::size_t>(n - 1, 16 * (2 * f.sections.size() + 1));
  std::vector<double> ext;
  ext.reserve(n + 2 * pad);
  const double first = w.samples.front(), last = w.samples.back();
  for (std::size_t k = pad; k >= 1; --k) ext.push_back(2.0 * first - w.samples[k]);
  ext.insert(ext.end(), w.samples.begin(), w.samples.end());
  for (std::size_t k = 1; k <= pad; ++k) ext.push_back(2.0 * last - w.samples[n - 1 - k]);

  Waveform fwd = run_sections(f, std::move(ext), w.sample_rate);
  std::reverse(fwd.samples.begin(), fwd.samples.end());
  Waveform bwd = run_sections(f, std::move(fwd.samples), w.sample_rate);
  std::reverse(bwd.samples.begin(), bwd.samples.end());
  std::vector<double> out(bwd.samples.begin() + static_cast<std::ptrdiff_t>(pad),
                          bwd.samples.begin() + static_cast<std::ptrdiff_t>(pad + n));
  return Waveform(std::move(out), w.sample_rate);
}

Waveform decimate(const Waveform& w, int ratio) {
  check_ratio(ratio);
  if (w.sample_rate % ratio != 0) throw InvalidArgument("sample rate not divisible by ratio");
  std::vector<double> out;
  out.reserve(w.size() / ratio + 1);
  for (std::size_t i = 0; i < w.size(); i += static_cast<std::size_t>(ratio)) {
    out.push_back(w.samples[i]);
  }
  return Waveform(std::move(out), w.sample_rate / ratio);
}

Waveform cubic_spline_upsample(const Waveform& w, int ratio) {
  check_ratio(ratio);
  const std::size_t n = w.size();
  if (n < 4) throw InvalidArgument("cubic spline needs at least 4 samples");
  if (ratio == 1) return w;
  const auto& y = w.samples;

  // Second derivatives with natural ends: m[0] = m[n-1] = 0; Thomas algorithm
  // on the interior system m[i-1] + 4 m[i] + m[i+1] = 6 (y[i+1] - 2 y[i] + y[i-1]).
  std::vector<double> m(n, 0.0), c(n, 0.0), d(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double rhs = 6.0 * (y[i + 1] - 2.0 * y[i] + y[i - 1]);
    const double denom = 4.0 - (i > 1 ? c[i - 1] : 0.0);
    c[i] = 1.0 / denom;
    d[i] = (rhs - (i > 1 ? d[i - 1] : 0.0)) / denom;
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    m[i] = d[i] - c[i] * m[i + 1];
  }

  std::vector<double> out(n * static_cast<std::size_t>(ratio));
  for (std::size_t k = 0; k < out.size(); ++k) {
    const std::size_t i = std::min(k / ratio, n - 2);
    const double u = static_cast<double>(k) / ratio - static_cast<double>(i);
    const double v = 1.0 - u;
    out[k] = v * y[i] + u * y[i + 1] + ((v * v * v - v) * m[i] + (u * u * u - u) * m[i + 1]) / 6.0;
  }
  return Waveform(std::move(out), w.sample_rate * ratio);
}

LowResPair simulate_lr(const Waveform& hr, int ratio, FilterKind kind) {
  check_ratio(ratio);
  if (hr.sample_rate % ratio != 0) throw InvalidArgument("HR rate not divisible by ratio");
  if (ratio == 1) return {hr, hr};
  const Waveform filtered = iir_apply_zero_phase(design_simulation_filter(kind, ratio), hr);
  LowResPair out;
  out.lr = decimate(filtered, ratio);
  out.inp = cubic_spline_upsample(out.lr, ratio);
  out.inp.samples.resize(hr.size());
  return out;
}

Waveform resample_chain(const Waveform& w, int ratio, FilterKind kind) {
  return simulate_lr(w, ratio, kind).inp;
}

Lossmap build_lossmap(int frames, int bins, int ratio, int frame_len, int sample_rate) {
  check_ratio(ratio);
  if (frames < 0 || bins < 1 || frame_len < 2 || sample_rate <= 0) {
    throw InvalidArgument("lossmap: invalid dimensions");
  }
  Lossmap m;
  m.frames = frames;
  m.bins = bins;
  m.mask.assign(static_cast<std::size_t>(frames) * bins, 0);
  // f * rate / frame_len > rate / (2 ratio)  <=>  2 ratio f > frame_len
  for (int f = 0; f < bins; ++f) {
    if (2LL * ratio * f <= frame_len) continue;
    for (int t = 0; t < frames; ++t) m.mask[static_cast<std::size_t>(t) * bins + f] = 1;
  }
  return m;
}

}  // namespace ssr
