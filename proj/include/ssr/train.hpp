#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <limits>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ssr/checkpoint.hpp"
#include "ssr/config.hpp"
#include "ssr/data.hpp"
#include "ssr/diffusion.hpp"
#include "ssr/networks.hpp"
#include "ssr/optim.hpp"

namespace ssr {

inline constexpr const char* kVersion = "0.1.0";

struct TrainConfig {
  int epochs = 100;
  int batch_size = 4;
  std::int64_t max_steps = 0;  ///< stop after this many optimizer steps (0: no limit)
  double lr0 = 6e-4;
  int plateau_patience = 3;
  double lr_factor = 0.5;
  double clip_norm = 1.0;
  double ema_decay = 0.999;
  std::uint64_t seed = 0;
  int sample_rate = 16000;
  int ratio = 2;
  FilterKind kind = FilterKind::chebyshev;
  double crop_s = 4.0;
  double valid_max_s = 8.0;
  std::filesystem::path train_manifest;
  std::filesystem::path valid_manifest;
  std::filesystem::path out_dir = "run";
  ArcnConfig arcn;
  DparnConfig dparn;
  NoiseSchedule schedule;

  void validate() const;
  KeyValues to_key_values() const;
  /// Relative manifest and output paths resolve against `base`.
  static TrainConfig from_key_values(const KeyValues& kv, const std::filesystem::path& base = {});
  static TrainConfig load(const std::filesystem::path& path);
};

/// Multiplies the learning rate by `factor` once `patience` consecutive epochs
/// fail to lower the best validation loss strictly.
class PlateauScheduler {
 public:
  PlateauScheduler() = default;
  PlateauScheduler(double lr, int patience, double factor);

  /// Records one epoch's validation loss; returns true when the rate dropped.
  bool step(double val_loss);
  double lr() const { return lr_; }
  double best() const { return best_; }
  int bad_epochs() const { return bad_epochs_; }

  void restore(double lr, double best, int bad_epochs);

 private:
  double lr_ = 0.0;
  int patience_ = 3;
  double factor_ = 0.5;
  double best_ = std::numeric_limits<double>::infinity();
  int bad_epochs_ = 0;
};

struct StepRecord {
  std::int64_t step = 0;
  int epoch = 0;
  LossReport loss;  ///< batch means
  double grad_norm = 0.0;
  double lr = 0.0;
  double wall_s = 0.0;
};

struct EpochRecord {
  int epoch = 0;
  double val_loss = 0.0;
  double lr = 0.0;  ///< rate in force for the next epoch
  double wall_s = 0.0;
};

struct RunLog {
  std::vector<StepRecord> steps;
  std::vector<EpochRecord> epochs;

  void write_steps_csv(std::ostream& out) const;
  void write_epochs_csv(std::ostream& out) const;
};

/// Training state: model, Adam, EMA shadow, plateau scheduler and counters.
class Trainer {
 public:
  explicit Trainer(const TrainConfig& cfg);
  /// Restores everything saved by to_checkpoint (config taken from the checkpoint).
  static std::unique_ptr<Trainer> from_checkpoint(const Checkpoint& ckpt);

  const TrainConfig& config() const { return cfg_; }
  SrModel& model() { return *model_; }
  const SrModel& model() const { return *model_; }
  const AdamState& optimizer() const { return opt_; }
  const EmaState& ema() const { return ema_; }
  const PlateauScheduler& scheduler() const { return plateau_; }
  const RunLog& log() const { return log_; }
  std::int64_t steps_done() const { return step_; }
  int epochs_done() const { return epoch_; }

  /// Per-utterance step k and noise drawn from (seed, step); accumulates
  /// gradients of the batch-mean loss, clips, steps Adam, updates the EMA.
  StepRecord train_step(const Batch& batch);
  /// Mean total loss with EMA weights and a fixed noise draw per utterance.
  double validation_loss(const std::vector<Batch>& batches) const;
  /// Feeds one validation loss to the scheduler and closes the epoch.
  EpochRecord end_epoch(double val_loss);

  /// Copy of the model with EMA weights, for inference.
  std::unique_ptr<SrModel> ema_model() const;

  Checkpoint to_checkpoint() const;
  /// Overrides the stopping criteria and output directory (used when resuming).
  void set_run_limits(int epochs, std::int64_t max_steps, const std::filesystem::path& out_dir);

 private:
  TrainConfig cfg_;
  std::unique_ptr<SrModel> model_;
  AdamState opt_;
  EmaState ema_;
  PlateauScheduler plateau_;
  RunLog log_;
  std::int64_t step_ = 0;
  int epoch_ = 0;
  double wall_offset_ = 0.0;
};

struct FitResult {
  std::filesystem::path last_checkpoint;
  std::filesystem::path best_checkpoint;
  RunLog log;
};

/// Runs epochs until cfg.epochs (or max_steps) is reached, resuming from
/// `resume` when given. Writes last.ckpt, best.ckpt, steps.csv, epochs.csv and
/// run.txt into cfg.out_dir. A non-finite loss saves diagnostic.ckpt and
/// throws NumericError.
FitResult fit(const TrainConfig& cfg, const std::vector<Utterance>& train,
              const std::vector<Utterance>& valid, const Checkpoint* resume = nullptr);

/// Model with EMA weights from a training checkpoint (or raw weights when the
/// checkpoint carries no shadow).
std::unique_ptr<SrModel> load_model(const Checkpoint& ckpt);

struct UtteranceMetrics {
  std::string id;
  MetricReport enhanced;
  MetricReport baseline;  ///< cubic-spline upsampling of the same LR input
};

struct EvalReport {
  std::vector<UtteranceMetrics> rows;
  MetricReport mean_enhanced;
  MetricReport mean_baseline;

  void write_csv(std::ostream& out) const;
};

/// Maps an LR waveform to an HR estimate; the generator is seeded per utterance.
using Enhancer = std::function<Waveform(const Waveform& lr, std::mt19937_64& rng)>;

/// Simulates LR input for each utterance with `kind`, enhances it and scores it
/// against HR together with the spline baseline.
EvalReport evaluate(const Enhancer& enhance, const std::vector<Utterance>& utts, int ratio,
                    FilterKind kind, std::uint64_t seed);
/// Model-based evaluation; repainting uses `repaint_kind` (the filter the model
/// was trained with), which may differ from the simulation filter `kind`.
EvalReport evaluate(const SrModel& model, const NoiseSchedule& sched,
                    const std::vector<Utterance>& utts, int ratio, FilterKind kind,
                    FilterKind repaint_kind, std::uint64_t seed);

/// Generator for (seed, stream) used for every seeded draw in training and inference.
std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace ssr
