#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ssr/resample.hpp"
#include "ssr/signal.hpp"

namespace ssr {

enum class SampleFormat { pcm16, float32 };

/// Mono RIFF/WAVE, PCM-16 (scaled by 1/32768) or IEEE float-32.
Waveform read_wav(const std::filesystem::path& path);
void write_wav(const std::filesystem::path& path, const Waveform& w,
               SampleFormat format = SampleFormat::float32);

struct ManifestEntry {
  std::string id;
  std::filesystem::path path;
  int sample_rate = 0;
  std::size_t samples = 0;
  std::string split;  ///< optional fifth column (train, valid, test)
};

/// Tab-separated `id, path, rate, samples[, split]` lines; relative paths
/// resolve against the manifest's directory.
struct Manifest {
  std::vector<ManifestEntry> entries;

  static Manifest load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
};

/// Integer-factor decimation to target_rate (anti-aliased with the
/// Chebyshev simulation filter), then zero mean and unit variance.
Waveform preprocess(const Waveform& w, int target_rate);

/// Deterministic pseudo-speech: a pitch-gliding harmonic series (f0 within
/// 80-300 Hz, harmonics below 7 kHz) under a formant envelope, plus 3-7 kHz
/// noise bursts. Peak-normalized to 0.5.
Waveform synth_utterance(double duration_s, int sample_rate, std::uint64_t seed);
/// Fraction of the signal's energy above `hz`.
double energy_fraction_above(const Waveform& w, double hz);
/// Writes `n` utterances as float-32 WAVs plus `manifest.tsv` into `dir`.
Manifest synth_corpus(const std::filesystem::path& dir, int n, double duration_s,
                      std::uint64_t seed, int sample_rate = 16000);

struct Utterance {
  std::string id;
  Waveform hr;
};

/// Reads and preprocesses every manifest entry.
std::vector<Utterance> load_utterances(const Manifest& m, int target_rate);

/// Equal-length rows; each row's real samples form a prefix of `valid[i]`
/// samples and both hr and inp are zero beyond it.
struct Batch {
  std::vector<std::string> ids;
  std::vector<Waveform> hr;
  std::vector<Waveform> inp;
  std::vector<std::size_t> valid;
  std::size_t length = 0;

  std::size_t size() const { return ids.size(); }
  std::vector<std::uint8_t> sample_mask(std::size_t row) const;
};

struct BatchOptions {
  int batch_size = 4;
  std::size_t crop_samples = 64000;
  int ratio = 2;
  FilterKind kind = FilterKind::chebyshev;
  std::uint64_t seed = 0;
};

/// One epoch: shuffled order, one random crop per utterance (zero-padded when
/// shorter), LR simulation per crop. Deterministic in (seed, epoch).
std::vector<Batch> make_batches(const std::vector<Utterance>& utts, const BatchOptions& opts,
                                int epoch);

/// Full utterances center-cropped to at most max_samples, simulated with the
/// given filter; one row per batch.
std::vector<Batch> validation_batches(const std::vector<Utterance>& utts, std::size_t max_samples,
                                      int ratio, FilterKind kind);

}  // namespace ssr
