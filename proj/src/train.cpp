#include "ssr/train.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ssr/error.hpp"

namespace ssr {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kStreamTrain = 1;
constexpr std::uint64_t kStreamValid = 2;
constexpr std::uint64_t kStreamEval = 3;

Waveform gaussian(std::size_t n, int rate, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Waveform z(std::vector<double>(n), rate);
  for (auto& v : z.samples) v = dist(rng);
  return z;
}

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  return out;
}

double parse_double(const std::string& s) {
  KeyValues kv;
  kv.set("v", s);
  return kv.get_double("v", 0.0);
}

std::int64_t parse_i64(const std::string& s) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError("checkpoint: bad integer '" + s + "'");
  }
}

void check_finite(const LossReport& r) {
  if (!std::isfinite(r.total)) {
    throw NumericError("non-finite training loss (l_pred " + format_double(r.l_pred) + ", l_diff " +
                       format_double(r.l_diff) + ")");
  }
}

std::unique_ptr<SrModel> build_model(const TrainConfig& cfg) {
  return std::make_unique<SrModel>(cfg.dparn, cfg.arcn, cfg.seed);
}

void load_params(ParameterSet& params, const Checkpoint& ckpt, const std::string& prefix,
                 const std::string& fallback_prefix) {
  for (auto& p : params.items()) {
    const TensorRecord* r = ckpt.find(prefix + p.name);
    if (!r && !fallback_prefix.empty()) r = ckpt.find(fallback_prefix + p.name);
    if (!r) throw ConfigError("checkpoint lacks parameter " + p.name);
    if (r->shape != p.tensor.shape()) {
      throw ConfigError("checkpoint shape " + shape_str(r->shape) + " for " + p.name +
                        " does not match architecture " + shape_str(p.tensor.shape()));
    }
    std::copy(r->values.begin(), r->values.end(), p.tensor.mutable_data().begin());
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

}  // namespace

std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),  static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// ---------------------------------------------------------------------------
// Configuration

void TrainConfig::validate() const {
  if (epochs < 1 || batch_size < 1 || max_steps < 0) throw ConfigError("train: epochs and batch_size must be positive");
  if (!(lr0 > 0.0) || plateau_patience < 1 || !(lr_factor > 0.0 && lr_factor < 1.0)) {
    throw ConfigError("train: need lr0 > 0, patience >= 1, lr_factor in (0, 1)");
  }
  if (!(clip_norm > 0.0) || !(ema_decay >= 0.0 && ema_decay <= 1.0)) {
    throw ConfigError("train: need clip_norm > 0 and ema_decay in [0, 1]");
  }
  if (ratio < 1 || sample_rate % ratio != 0) throw ConfigError("train: ratio must divide the sample rate");
  if (!(crop_s > 0.0) || !(valid_max_s > 0.0)) throw ConfigError("train: crop lengths must be positive");
  if (arcn.sample_rate != sample_rate) throw ConfigError("train: arcn.sample_rate differs from data.sample_rate");
  if (arcn.total_steps != schedule.total_steps) {
    throw ConfigError("train: arcn.total_steps differs from schedule.total_steps");
  }
  arcn.validate();
  dparn.validate();
  try {
    schedule.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

KeyValues TrainConfig::to_key_values() const {
  KeyValues kv;
  kv.set("train.epochs", epochs);
  kv.set("train.batch_size", batch_size);
  kv.set("train.max_steps", std::to_string(max_steps));
  kv.set("train.lr0", lr0);
  kv.set("train.plateau_patience", plateau_patience);
  kv.set("train.lr_factor", lr_factor);
  kv.set("train.clip_norm", clip_norm);
  kv.set("train.ema_decay", ema_decay);
  kv.set("train.seed", std::to_string(seed));
  kv.set("train.out_dir", out_dir.string());
  kv.set("data.sample_rate", sample_rate);
  kv.set("data.ratio", ratio);
  kv.set("data.filter", std::string(to_string(kind)));
  kv.set("data.crop_s", crop_s);
  kv.set("data.valid_max_s", valid_max_s);
  kv.set("data.train_manifest", train_manifest.string());
  kv.set("data.valid_manifest", valid_manifest.string());
  kv.set("schedule.sigma_min", schedule.sigma_min);
  kv.set("schedule.sigma_max", schedule.sigma_max);
  kv.set("schedule.gamma", schedule.gamma);
  kv.set("schedule.total_steps", schedule.total_steps);
  kv.set("schedule.inference_steps", schedule.inference_steps);
  arcn.write(kv, "arcn.");
  dparn.write(kv, "dparn.");
  return kv;
}

TrainConfig TrainConfig::from_key_values(const KeyValues& kv, const fs::path& base) {
  std::set<std::string> known;
  const KeyValues defaults = TrainConfig{}.to_key_values();
  for (const auto& [k, v] : defaults.entries()) known.insert(k);
  kv.reject_unknown(known);

  TrainConfig c;
  c.epochs = kv.get_int("train.epochs", c.epochs);
  c.batch_size = kv.get_int("train.batch_size", c.batch_size);
  c.max_steps = kv.get_int("train.max_steps", 0);
  c.lr0 = kv.get_double("train.lr0", c.lr0);
  c.plateau_patience = kv.get_int("train.plateau_patience", c.plateau_patience);
  c.lr_factor = kv.get_double("train.lr_factor", c.lr_factor);
  c.clip_norm = kv.get_double("train.clip_norm", c.clip_norm);
  c.ema_decay = kv.get_double("train.ema_decay", c.ema_decay);
  const std::string seed = kv.get_string("train.seed", "0");
  try {
    std::size_t pos = 0;
    c.seed = std::stoull(seed, &pos);
    if (pos != seed.size()) throw std::invalid_argument(seed);
  } catch (const std::exception&) {
    throw ConfigError("train.seed: expected an unsigned integer, got '" + seed + "'");
  }
  auto path = [&](const std::string& key, const fs::path& fallback) {
    fs::path p = kv.get_string(key, fallback.string());
    if (!p.empty() && p.is_relative() && !base.empty()) p = base / p;
    return p;
  };
  c.out_dir = path("train.out_dir", c.out_dir);
  c.sample_rate = kv.get_int("data.sample_rate", c.sample_rate);
  c.ratio = kv.get_int("data.ratio", c.ratio);
  try {
    c.kind = parse_filter_kind(kv.get_string("data.filter", "chebyshev"));
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  c.crop_s = kv.get_double("data.crop_s", c.crop_s);
  c.valid_max_s = kv.get_double("data.valid_max_s", c.valid_max_s);
  c.train_manifest = path("data.train_manifest", {});
  c.valid_manifest = path("data.valid_manifest", {});
  c.schedule.sigma_min = kv.get_double("schedule.sigma_min", c.schedule.sigma_min);
  c.schedule.sigma_max = kv.get_double("schedule.sigma_max", c.schedule.sigma_max);
  c.schedule.gamma = kv.get_double("schedule.gamma", c.schedule.gamma);
  c.schedule.total_steps = kv.get_int("schedule.total_steps", c.schedule.total_steps);
  c.schedule.inference_steps = kv.get_int("schedule.inference_steps", c.schedule.inference_steps);
  try {
    c.arcn = ArcnConfig::read(kv, "arcn.");
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  c.dparn = DparnConfig::read(kv, "dparn.");
  c.validate();
  return c;
}

TrainConfig TrainConfig::load(const fs::path& path) {
  return from_key_values(KeyValues::load(path), path.parent_path());
}

// ---------------------------------------------------------------------------
// Scheduler and log

PlateauScheduler::PlateauScheduler(double lr, int patience, double factor)
    : lr_(lr), patience_(patience), factor_(factor) {
  if (!(lr > 0.0) || patience < 1 || !(factor > 0.0 && factor < 1.0)) {
    throw InvalidArgument("plateau scheduler: bad parameters");
  }
}

bool PlateauScheduler::step(double val_loss) {
  if (val_loss < best_) {
    best_ = val_loss;
    bad_epochs_ = 0;
    return false;
  }
  if (++bad_epochs_ >= patience_) {
    lr_ *= factor_;
    bad_epochs_ = 0;
    return true;
  }
  return false;
}

void PlateauScheduler::restore(double lr, double best, int bad_epochs) {
  lr_ = lr;
  best_ = best;
  bad_epochs_ = bad_epochs;
}

void RunLog::write_steps_csv(std::ostream& out) const {
  out << "step,epoch,loss,l_pred,l_time,l_freq,l_diff,lambda,grad_norm,lr,wall_s\n";
  for (const auto& r : steps) {
    out << r.step << ',' << r.epoch << ',' << format_double(r.loss.total) << ','
        << format_double(r.loss.l_pred) << ',' << format_double(r.loss.l_time) << ','
        << format_double(r.loss.l_freq) << ',' << format_double(r.loss.l_diff) << ','
        << format_double(r.loss.lambda_weight) << ',' << format_double(r.grad_norm) << ','
        << format_double(r.lr) << ',' << format_double(r.wall_s) << '\n';
  }
}

void RunLog::write_epochs_csv(std::ostream& out) const {
  out << "epoch,val_loss,lr,wall_s\n";
  for (const auto& r : epochs) {
    out << r.epoch << ',' << format_double(r.val_loss) << ',' << format_double(r.lr) << ','
        << format_double(r.wall_s) << '\n';
  }
}

namespace {

RunLog parse_log(const std::string& steps_csv, const std::string& epochs_csv) {
  RunLog log;
  auto lines = split(steps_csv, '\n');
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto c = split(lines[i], ',');
    if (c.size() != 11) throw FormatError("checkpoint: malformed step log row");
    StepRecord r;
    r.step = parse_i64(c[0]);
    r.epoch = static_cast<int>(parse_i64(c[1]));
    r.loss.total = parse_double(c[2]);
    r.loss.l_pred = parse_double(c[3]);
    r.loss.l_time = parse_double(c[4]);
    r.loss.l_freq = parse_double(c[5]);
    r.loss.l_diff = parse_double(c[6]);
    r.loss.lambda_weight = parse_double(c[7]);
    r.grad_norm = parse_double(c[8]);
    r.lr = parse_double(c[9]);
    r.wall_s = parse_double(c[10]);
    log.steps.push_back(r);
  }
  lines = split(epochs_csv, '\n');
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    auto c = split(lines[i], ',');
    if (c.size() != 4) throw FormatError("checkpoint: malformed epoch log row");
    log.epochs.push_back(EpochRecord{static_cast<int>(parse_i64(c[0])), parse_double(c[1]),
                                     parse_double(c[2]), parse_double(c[3])});
  }
  return log;
}

}  // namespace

// ---------------------------------------------------------------------------
// Trainer

Trainer::Trainer(const TrainConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  model_ = build_model(cfg_);
  opt_.lr = cfg_.lr0;
  ema_ = ema_init(model_->params, cfg_.ema_decay);
  plateau_ = PlateauScheduler(cfg_.lr0, cfg_.plateau_patience, cfg_.lr_factor);
}

void Trainer::set_run_limits(int epochs, std::int64_t max_steps, const fs::path& out_dir) {
  cfg_.epochs = epochs;
  cfg_.max_steps = max_steps;
  cfg_.out_dir = out_dir;
}

StepRecord Trainer::train_step(const Batch& batch) {
  if (batch.size() == 0) throw InvalidArgument("train_step: empty batch");
  const double t0 = now_s();
  auto rng = stream_rng(cfg_.seed, kStreamTrain, static_cast<std::uint64_t>(step_));
  std::uniform_int_distribution<int> pick(1, cfg_.schedule.total_steps);
  ParameterSet& params = model_->params;
  params.zero_grad();

  const double inv_b = 1.0 / static_cast<double>(batch.size());
  StepRecord rec;
  rec.step = step_;
  rec.epoch = epoch_;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const int k = pick(rng);
    const Waveform z = gaussian(batch.length, batch.hr[i].sample_rate, rng);
    ExampleLoss ex = example_loss(*model_, batch.hr[i], batch.inp[i], batch.valid[i], cfg_.ratio, k,
                                  z, cfg_.schedule);
    check_finite(ex.report);
    backward(scale(ex.total, inv_b));
    rec.loss.l_pred += inv_b * ex.report.l_pred;
    rec.loss.l_time += inv_b * ex.report.l_time;
    rec.loss.l_freq += inv_b * ex.report.l_freq;
    rec.loss.l_diff += inv_b * ex.report.l_diff;
    rec.loss.lambda_weight += inv_b * ex.report.lambda_weight;
    rec.loss.total += inv_b * ex.report.total;
  }
  rec.grad_norm = global_grad_norm(params);
  if (!std::isfinite(rec.grad_norm)) throw NumericError("non-finite gradient norm");
  clip_global_norm(params, cfg_.clip_norm);
  opt_.lr = plateau_.lr();
  adam_step(opt_, params);
  // Short runs would otherwise leave the shadow near its initialization.
  const double warm = (1.0 + static_cast<double>(step_)) / (10.0 + static_cast<double>(step_));
  ema_.decay = std::min(cfg_.ema_decay, warm);
  ema_update(ema_, params);
  ++step_;
  rec.lr = opt_.lr;
  rec.wall_s = now_s() - t0;
  log_.steps.push_back(rec);
  return rec;
}

std::unique_ptr<SrModel> Trainer::ema_model() const {
  auto m = build_model(cfg_);
  ema_apply(ema_, m->params);
  return m;
}

double Trainer::validation_loss(const std::vector<Batch>& batches) const {
  auto m = ema_model();
  double acc = 0.0;
  std::size_t count = 0;
  std::uint64_t index = 0;
  for (const auto& b : batches) {
    for (std::size_t i = 0; i < b.size(); ++i, ++index) {
      auto rng = stream_rng(cfg_.seed, kStreamValid, index);
      std::uniform_int_distribution<int> pick(1, cfg_.schedule.total_steps);
      const int k = pick(rng);
      const Waveform z = gaussian(b.length, b.hr[i].sample_rate, rng);
      acc += example_loss(*m, b.hr[i], b.inp[i], b.valid[i], cfg_.ratio, k, z, cfg_.schedule)
                 .report.total;
      ++count;
    }
  }
  if (count == 0) throw InvalidArgument("validation_loss: no utterances");
  return acc / static_cast<double>(count);
}

EpochRecord Trainer::end_epoch(double val_loss) {
  plateau_.step(val_loss);
  EpochRecord rec{epoch_, val_loss, plateau_.lr(), 0.0};
  double wall = 0.0;
  for (const auto& s : log_.steps) {
    if (s.epoch == epoch_) wall += s.wall_s;
  }
  rec.wall_s = wall;
  ++epoch_;
  log_.epochs.push_back(rec);
  return rec;
}

Checkpoint Trainer::to_checkpoint() const {
  Checkpoint c;
  c.meta["format"] = "ssr-train";
  c.meta["version"] = kVersion;
  c.meta["config"] = cfg_.to_key_values().to_string();
  c.meta["step"] = std::to_string(step_);
  c.meta["epoch"] = std::to_string(epoch_);
  c.meta["adam.step"] = std::to_string(opt_.step);
  c.meta["adam.lr"] = format_double(opt_.lr);
  c.meta["ema.decay"] = format_double(ema_.decay);
  c.meta["plateau.lr"] = format_double(plateau_.lr());
  c.meta["plateau.best"] = format_double(plateau_.best());
  c.meta["plateau.bad_epochs"] = std::to_string(plateau_.bad_epochs());
  std::ostringstream steps, epochs;
  log_.write_steps_csv(steps);
  log_.write_epochs_csv(epochs);
  c.meta["log.steps"] = steps.str();
  c.meta["log.epochs"] = epochs.str();

  const auto items = model_->params.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& p = items[i];
    auto d = p.tensor.data();
    c.tensors.push_back({"param/" + p.name, p.tensor.shape(), {d.begin(), d.end()}});
    c.tensors.push_back({"ema/" + p.name, p.tensor.shape(), ema_.shadow[i]});
    if (!opt_.m.empty()) {
      c.tensors.push_back({"adam.m/" + p.name, p.tensor.shape(), opt_.m[i]});
      c.tensors.push_back({"adam.v/" + p.name, p.tensor.shape(), opt_.v[i]});
    }
  }
  return c;
}

std::unique_ptr<Trainer> Trainer::from_checkpoint(const Checkpoint& ckpt) {
  const TrainConfig cfg = TrainConfig::from_key_values(KeyValues::parse(ckpt.require_meta("config")));
  auto t = std::make_unique<Trainer>(cfg);
  load_params(t->model_->params, ckpt, "param/", "");
  const auto items = t->model_->params.items();
  for (std::size_t i = 0; i < items.size(); ++i) {
    t->ema_.shadow[i] = ckpt.require("ema/" + items[i].name).values;
  }
  t->opt_.step = parse_i64(ckpt.require_meta("adam.step"));
  t->opt_.lr = parse_double(ckpt.require_meta("adam.lr"));
  if (t->opt_.step > 0) {
    for (const auto& p : items) {
      t->opt_.m.push_back(ckpt.require("adam.m/" + p.name).values);
      t->opt_.v.push_back(ckpt.require("adam.v/" + p.name).values);
    }
  }
  t->ema_.decay = parse_double(ckpt.require_meta("ema.decay"));
  t->plateau_.restore(parse_double(ckpt.require_meta("plateau.lr")),
                      parse_double(ckpt.require_meta("plateau.best")),
                      static_cast<int>(parse_i64(ckpt.require_meta("plateau.bad_epochs"))));
  t->step_ = parse_i64(ckpt.require_meta("step"));
  t->epoch_ = static_cast<int>(parse_i64(ckpt.require_meta("epoch")));
  t->log_ = parse_log(ckpt.require_meta("log.steps"), ckpt.require_meta("log.epochs"));
  return t;
}

std::unique_ptr<SrModel> load_model(const Checkpoint& ckpt) {
  const TrainConfig cfg = TrainConfig::from_key_values(KeyValues::parse(ckpt.require_meta("config")));
  auto m = build_model(cfg);
  load_params(m->params, ckpt, "ema/", "param/");
  return m;
}

// ---------------------------------------------------------------------------
// Driver

FitResult fit(const TrainConfig& cfg, const std::vector<Utterance>& train,
              const std::vector<Utterance>& valid, const Checkpoint* resume) {
  cfg.validate();
  if (train.empty() || valid.empty()) throw InvalidArgument("fit: empty train or validation set");
  std::unique_ptr<Trainer> trainer;
  if (resume) {
    trainer = Trainer::from_checkpoint(*resume);
    trainer->set_run_limits(cfg.epochs, cfg.max_steps, cfg.out_dir);
  } else {
    trainer = std::make_unique<Trainer>(cfg);
  }
  const TrainConfig& run = trainer->config();
  fs::create_directories(run.out_dir);
  {
    std::ostringstream meta;
    meta << "# ssr " << kVersion << "\n" << run.to_key_values().to_string();
    write_text(run.out_dir / "run.txt", meta.str());
  }

  FitResult result;
  result.last_checkpoint = run.out_dir / "last.ckpt";
  result.best_checkpoint = run.out_dir / "best.ckpt";
  const auto val_batches = validation_batches(
      valid, static_cast<std::size_t>(std::llround(run.valid_max_s * run.sample_rate)), run.ratio,
      run.kind);
  BatchOptions opts;
  opts.batch_size = run.batch_size;
  opts.crop_samples = static_cast<std::size_t>(std::llround(run.crop_s * run.sample_rate));
  opts.ratio = run.ratio;
  opts.kind = run.kind;
  opts.seed = run.seed;

  auto out_of_steps = [&] { return run.max_steps > 0 && trainer->steps_done() >= run.max_steps; };
  while (trainer->epochs_done() < run.epochs && !out_of_steps()) {
    for (const Batch& b : make_batches(train, opts, trainer->epochs_done())) {
      if (out_of_steps()) break;
      try {
        trainer->train_step(b);
      } catch (const NumericError&) {
        save_checkpoint(run.out_dir / "diagnostic.ckpt", trainer->to_checkpoint());
        throw;
      }
    }
    const double best_before = trainer->scheduler().best();
    const double val = trainer->validation_loss(val_batches);
    if (!std::isfinite(val)) {
      save_checkpoint(run.out_dir / "diagnostic.ckpt", trainer->to_checkpoint());
      throw NumericError("non-finite validation loss");
    }
    trainer->end_epoch(val);
    const Checkpoint ckpt = trainer->to_checkpoint();
    save_checkpoint(result.last_checkpoint, ckpt);
    if (val < best_before) save_checkpoint(result.best_checkpoint, ckpt);
  }
  {
    std::ofstream steps(run.out_dir / "steps.csv"), epochs(run.out_dir / "epochs.csv");
    trainer->log().write_steps_csv(steps);
    trainer->log().write_epochs_csv(epochs);
  }
  result.log = trainer->log();
  return result;
}

// ---------------------------------------------------------------------------
// Evaluation

void EvalReport::write_csv(std::ostream& out) const {
  out << "utterance_id,sisnr_db,lsd_db,baseline_sisnr_db,baseline_lsd_db\n";
  auto row = [&](const std::string& id, const MetricReport& e, const MetricReport& b) {
    out << id << ',' << format_double(e.sisnr_db) << ',' << format_double(e.lsd_db) << ','
        << format_double(b.sisnr_db) << ',' << format_double(b.lsd_db) << '\n';
  };
  for (const auto& r : rows) row(r.id, r.enhanced, r.baseline);
  row("mean", mean_enhanced, mean_baseline);
}

EvalReport evaluate(const Enhancer& enhance, const std::vector<Utterance>& utts, int ratio,
                    FilterKind kind, std::uint64_t seed) {
  if (utts.empty()) throw InvalidArgument("evaluate: no utterances");
  EvalReport rep;
  for (std::size_t i = 0; i < utts.size(); ++i) {
    const Waveform& hr = utts[i].hr;
    const LowResPair pair = simulate_lr(hr, ratio, kind);
    auto rng = stream_rng(seed, kStreamEval, i);
    Waveform est = enhance(pair.lr, rng);
    est.samples.resize(hr.size(), 0.0);
    UtteranceMetrics m{utts[i].id, measure(est, hr), measure(pair.inp, hr)};
    rep.mean_enhanced.sisnr_db += m.enhanced.sisnr_db;
    rep.mean_enhanced.lsd_db += m.enhanced.lsd_db;
    rep.mean_baseline.sisnr_db += m.baseline.sisnr_db;
    rep.mean_baseline.lsd_db += m.baseline.lsd_db;
    rep.rows.push_back(std::move(m));
  }
  const double n = static_cast<double>(utts.size());
  rep.mean_enhanced.sisnr_db /= n;
  rep.mean_enhanced.lsd_db /= n;
  rep.mean_baseline.sisnr_db /= n;
  rep.mean_baseline.lsd_db /= n;
  return rep;
}

EvalReport evaluate(const SrModel& model, const NoiseSchedule& sched,
                    const std::vector<Utterance>& utts, int ratio, FilterKind kind,
                    FilterKind repaint_kind, std::uint64_t seed) {
  ReverseOptions opts;
  opts.ratio = ratio;
  opts.kind = repaint_kind;
  auto enhance = [&](const Waveform& lr, std::mt19937_64& rng) {
    return reverse_infer(lr, model, sched, opts, rng);
  };
  return evaluate(enhance, utts, ratio, kind, seed);
}

}  // namespace ssr
