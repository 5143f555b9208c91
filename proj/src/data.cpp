#include "ssr/data.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "ssr/error.hpp"

namespace ssr {

namespace fs = std::filesystem;

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint16_t get_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}
std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}
void put_u16(std::string& s, std::uint16_t v) {
  s.push_back(static_cast<char>(v & 0xFF));
  s.push_back(static_cast<char>(v >> 8));
}
void put_u32(std::string& s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  return std::mt19937_64(seq);
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T v{};
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || p != text.data() + text.size()) {
    throw FormatError("manifest: bad " + what + " '" + text + "'");
  }
  return v;
}

Waveform bandpass_noise(std::size_t n, int rate, double lo_hz, double hi_hz, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Waveform w(std::vector<double>(n), rate);
  for (auto& v : w.samples) v = dist(rng);
  const double nyq = rate / 2.0;
  const Waveform hi = iir_apply_zero_phase(design_cheby1_lowpass(8, 0.05, hi_hz / nyq), w);
  const Waveform lo = iir_apply_zero_phase(design_cheby1_lowpass(8, 0.05, lo_hz / nyq), w);
  for (std::size_t i = 0; i < n; ++i) w.samples[i] = hi.samples[i] - lo.samples[i];
  return w;
}

void append_row(Batch& b, const std::string& id, const Waveform& hr, std::size_t length,
                int ratio, FilterKind kind) {
  Waveform inp = simulate_lr(hr, ratio, kind).inp;
  Waveform h = hr;
  h.samples.resize(length, 0.0);
  inp.samples.resize(length, 0.0);
  b.ids.push_back(id);
  b.valid.push_back(hr.size());
  b.hr.push_back(std::move(h));
  b.inp.push_back(std::move(inp));
  b.length = length;
}

}  // namespace

// ---------------------------------------------------------------------------
// WAV

Waveform read_wav(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* d = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();
  if (size < 12 || std::memcmp(d, "RIFF", 4) != 0 || std::memcmp(d + 8, "WAVE", 4) != 0) {
    throw FormatError(path.string() + ": malformed header (not RIFF/WAVE)");
  }
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const std::uint32_t len = get_u32(d + pos + 4);
    const unsigned char* body = d + pos + 8;
    if (pos + 8 + len > size) throw FormatError(path.string() + ": malformed header (truncated chunk)");
    if (std::memcmp(d + pos, "fmt ", 4) == 0) {
      if (len < 16) throw FormatError(path.string() + ": malformed header (short fmt chunk)");
      format = get_u16(body);
      channels = get_u16(body + 2);
      rate = get_u32(body + 4);
      bits = get_u16(body + 14);
      if (format == kFormatExtensible) {
        if (len < 26) throw FormatError(path.string() + ": malformed extensible fmt chunk");
        format = get_u16(body + 24);
      }
      have_fmt = true;
    } else if (std::memcmp(d + pos, "data", 4) == 0) {
      if (!have_fmt) throw FormatError(path.string() + ": malformed header (data before fmt)");
      if (channels != 1) {
        throw FormatError(path.string() + ": " + std::to_string(channels) +
                          " channels; only mono is supported");
      }
      if (rate == 0) throw FormatError(path.string() + ": zero sample rate");
      Waveform w;
      w.sample_rate = static_cast<int>(rate);
      if (format == kFormatPcm && bits == 16) {
        w.samples.resize(len / 2);
        for (std::size_t i = 0; i < w.samples.size(); ++i) {
          w.samples[i] = static_cast<std::int16_t>(get_u16(body + 2 * i)) / 32768.0;
        }
      } else if (format == kFormatFloat && bits == 32) {
        w.samples.resize(len / 4);
        for (std::size_t i = 0; i < w.samples.size(); ++i) {
          const std::uint32_t u = get_u32(body + 4 * i);
          float f;
          std::memcpy(&f, &u, 4);
          w.samples[i] = f;
        }
      } else {
        throw FormatError(path.string() + ": unsupported codec (format " + std::to_string(format) +
                          ", " + std::to_string(bits) + " bits)");
      }
      return w;
    }
    pos += 8 + len + (len & 1u);
  }
  throw FormatError(path.string() + ": malformed header (no data chunk)");
}

void write_wav(const fs::path& path, const Waveform& w, SampleFormat format) {
  const bool pcm = format == SampleFormat::pcm16;
  const std::uint16_t bits = pcm ? 16 : 32;
  const std::uint32_t data_len = static_cast<std::uint32_t>(w.size() * (bits / 8));
  std::string s;
  s.reserve(44 + data_len);
  s += "RIFF";
  put_u32(s, 36 + data_len);
  s += "WAVEfmt ";
  put_u32(s, 16);
  put_u16(s, pcm ? kFormatPcm : kFormatFloat);
  put_u16(s, 1);
  put_u32(s, static_cast<std::uint32_t>(w.sample_rate));
  put_u32(s, static_cast<std::uint32_t>(w.sample_rate) * (bits / 8));
  put_u16(s, bits / 8);
  put_u16(s, bits);
  s += "data";
  put_u32(s, data_len);
  for (double x : w.samples) {
    if (pcm) {
      const long q = std::clamp(std::lround(x * 32768.0), -32767L, 32767L);
      put_u16(s, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    } else {
      const float f = static_cast<float>(x);
      std::uint32_t u;
      std::memcpy(&u, &f, 4);
      put_u32(s, u);
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
  if (!out) throw FormatError("write failed: " + path.string());
}

// ---------------------------------------------------------------------------
// Manifest

Manifest Manifest::load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open manifest " + path.string());
  Manifest m;
  std::set<std::string> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, '\t');) cols.push_back(c);
    if (cols.size() < 4 || cols.size() > 5) {
      throw FormatError(path.string() + ":" + std::to_string(lineno) + ": expected 4 or 5 columns");
    }
    ManifestEntry e;
    e.id = cols[0];
    e.path = cols[1];
    if (e.path.is_relative()) e.path = path.parent_path() / e.path;
    e.sample_rate = parse_number<int>(cols[2], "rate");
    e.samples = parse_number<std::size_t>(cols[3], "sample count");
    if (cols.size() == 5) e.split = cols[4];
    if (!ids.insert(e.id).second) throw FormatError("manifest: duplicate id '" + e.id + "'");
    if (!fs::exists(e.path)) throw FormatError("manifest: missing file " + e.path.string());
    m.entries.push_back(std::move(e));
  }
  return m;
}

void Manifest::save(const fs::path& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot write manifest " + path.string());
  const fs::path base = path.parent_path();
  for (const auto& e : entries) {
    fs::path p = e.path;
    if (!base.empty() && p.is_absolute() == base.is_absolute()) {
      const auto rel = p.lexically_relative(base);
      if (!rel.empty() && *rel.begin() != "..") p = rel;
    }
    out << e.id << '\t' << p.generic_string() << '\t' << e.sample_rate << '\t' << e.samples;
    if (!e.split.empty()) out << '\t' << e.split;
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Preprocessing and corpus generation

Waveform preprocess(const Waveform& w, int target_rate) {
  if (target_rate <= 0 || w.sample_rate < target_rate) {
    throw InvalidArgument("preprocess: source rate below target");
  }
  Waveform x = w;
  if (w.sample_rate != target_rate) {
    if (w.sample_rate % target_rate != 0) {
      throw InvalidArgument("preprocess: unsupported non-integer rate factor " +
                            std::to_string(w.sample_rate) + " -> " + std::to_string(target_rate));
    }
    const int factor = w.sample_rate / target_rate;
    x = decimate(iir_apply_zero_phase(design_simulation_filter(FilterKind::chebyshev, factor), w),
                 factor);
  }
  return normalize(x).wave;
}

Waveform synth_utterance(double duration_s, int rate, std::uint64_t seed) {
  if (!(duration_s > 0.0) || rate <= 0) throw InvalidArgument("synth_utterance: bad duration or rate");
  const std::size_t n = static_cast<std::size_t>(std::llround(duration_s * rate));
  auto rng = seeded(seed, 0x5917);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double nyq_guard = std::min(7000.0, 0.45 * rate);

  // Pitch glides around a speaker-specific center, kept inside 80-300 Hz.
  const double center = 110.0 + 90.0 * u(rng);
  const double depth = 0.25 + 0.2 * u(rng);
  const double glide_hz = 0.4 + 0.8 * u(rng);
  const double glide_phase = two_pi * u(rng);
  std::array<double, 3> formant{400.0 + 400.0 * u(rng), 1100.0 + 900.0 * u(rng),
                                2400.0 + 1000.0 * u(rng)};
  const double syllable_hz = 2.5 + 2.0 * u(rng);
  const double syllable_phase = two_pi * u(rng);

  auto envelope = [&](double f) {
    double e = 0.3;
    for (double fk : formant) e += std::exp(-0.5 * std::pow((f - fk) / 180.0, 2.0));
    return e;
  };

  Waveform w(std::vector<double>(n, 0.0), rate);
  double phase = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / rate;
    const double f0 = std::clamp(center * (1.0 + depth * std::sin(two_pi * glide_hz * t + glide_phase)),
                                 80.0, 300.0);
    phase += two_pi * f0 / rate;
    double s = 0.0;
    for (int h = 1; h * f0 < nyq_guard; ++h) s += envelope(h * f0) * std::sin(h * phase) / std::sqrt(h);
    const double syl = 0.3 + 0.7 * std::pow(std::sin(two_pi * syllable_hz * t / 2.0 + syllable_phase), 2.0);
    w.samples[i] = syl * s;
  }

  const Waveform noise = bandpass_noise(n, rate, 3000.0, nyq_guard, rng);
  double voiced_rms = 0.0;
  for (double v : w.samples) voiced_rms += v * v;
  voiced_rms = std::sqrt(voiced_rms / static_cast<double>(n));
  // Fricative-like bursts over a low aspiration floor.
  std::vector<double> hiss(n, 0.1);
  const int bursts = std::max(1, static_cast<int>(std::lround(2.0 * duration_s)));
  for (int b = 0; b < bursts; ++b) {
    const double len_s = 0.05 + 0.1 * u(rng);
    const auto len = static_cast<std::size_t>(len_s * rate);
    if (len >= n) continue;
    const auto start = static_cast<std::size_t>(u(rng) * static_cast<double>(n - len));
    for (std::size_t k = 0; k < len; ++k) {
      hiss[start + k] += 1.5 * (0.5 - 0.5 * std::cos(two_pi * static_cast<double>(k) / static_cast<double>(len)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) hiss[i] *= voiced_rms * noise.samples[i];

  // Raise the noise until at least 12% of the energy sits above 4 kHz.
  const Waveform voiced = w;
  for (double gain = 1.0; gain < 64.0; gain *= 1.25) {
    for (std::size_t i = 0; i < n; ++i) w.samples[i] = voiced.samples[i] + gain * hiss[i];
    if (rate <= 8000 || energy_fraction_above(w, 4000.0) >= 0.12) break;
  }

  double peak = 0.0;
  for (double v : w.samples) peak = std::max(peak, std::fabs(v));
  if (peak > 0.0) {
    for (double& v : w.samples) v *= 0.5 / peak;
  }
  return w;
}

double energy_fraction_above(const Waveform& w, double hz) {
  const auto s = stft(w, FrameConfig{});
  const double bin_hz = static_cast<double>(w.sample_rate) / s.frame_len;
  double hi = 0.0, all = 0.0;
  for (int t = 0; t < s.frames; ++t) {
    for (int f = 0; f < s.bins; ++f) {
      const double e = std::norm(s.at(t, f));
      all += e;
      if (f * bin_hz > hz) hi += e;
    }
  }
  return all > 0.0 ? hi / all : 0.0;
}

Manifest synth_corpus(const fs::path& dir, int n, double duration_s, std::uint64_t seed,
                      int sample_rate) {
  if (n < 1) throw InvalidArgument("synth_corpus: need at least one utterance");
  fs::create_directories(dir);
  Manifest m;
  for (int i = 0; i < n; ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "synth_%04d", i);
    const Waveform w = synth_utterance(duration_s, sample_rate, seed * 1000003ULL + static_cast<std::uint64_t>(i));
    const fs::path p = dir / (std::string(id) + ".wav");
    write_wav(p, w, SampleFormat::float32);
    m.entries.push_back(ManifestEntry{id, p, sample_rate, w.size(), ""});
  }
  m.save(dir / "manifest.tsv");
  return m;
}

std::vector<Utterance> load_utterances(const Manifest& m, int target_rate) {
  std::vector<Utterance> out;
  out.reserve(m.entries.size());
  for (const auto& e : m.entries) out.push_back(Utterance{e.id, preprocess(read_wav(e.path), target_rate)});
  return out;
}

// ---------------------------------------------------------------------------
// Batching

std::vector<std::uint8_t> Batch::sample_mask(std::size_t row) const {
  std::vector<std::uint8_t> m(length, 0);
  std::fill_n(m.begin(), valid.at(row), 1);
  return m;
}

std::vector<Batch> make_batches(const std::vector<Utterance>& utts, const BatchOptions& opts,
                                int epoch) {
  if (utts.empty()) throw InvalidArgument("make_batches: empty corpus");
  if (opts.batch_size < 1 || opts.crop_samples < 4) throw InvalidArgument("make_batches: bad options");
  auto rng = seeded(opts.seed, 0xBA7C, static_cast<std::uint64_t>(epoch));
  std::vector<std::size_t> order(utts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Batch> batches;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i % static_cast<std::size_t>(opts.batch_size) == 0) batches.emplace_back();
    const Utterance& u = utts[order[i]];
    Waveform crop = u.hr;
    if (u.hr.size() > opts.crop_samples) {
      std::uniform_int_distribution<std::size_t> off(0, u.hr.size() - opts.crop_samples);
      const std::size_t o = off(rng);
      crop.samples.assign(u.hr.samples.begin() + static_cast<std::ptrdiff_t>(o),
                          u.hr.samples.begin() + static_cast<std::ptrdiff_t>(o + opts.crop_samples));
    }
    append_row(batches.back(), u.id, crop, opts.crop_samples, opts.ratio, opts.kind);
  }
  return batches;
}

std::vector<Batch> validation_batches(const std::vector<Utterance>& utts, std::size_t max_samples,
                                      int ratio, FilterKind kind) {
  std::vector<Batch> out;
  for (const auto& u : utts) {
    Waveform crop = u.hr;
    if (crop.size() > max_samples) {
      const std::size_t o = (crop.size() - max_samples) / 2;
      crop.samples.assign(u.hr.samples.begin() + static_cast<std::ptrdiff_t>(o),
                          u.hr.samples.begin() + static_cast<std::ptrdiff_t>(o + max_samples));
    }
    Batch b;
    append_row(b, u.id, crop, crop.size(), ratio, kind);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace ssr
