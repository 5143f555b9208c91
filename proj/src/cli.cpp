#include "ssr/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "ssr/checkpoint.hpp"
#include "ssr/data.hpp"
#include "ssr/diffusion.hpp"
#include "ssr/error.hpp"
#include "ssr/train.hpp"

namespace ssr {

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::trunc);
  if (!out) throw FormatError("cannot write " + p.string());
  return out;
}

TrainConfig checkpoint_config(const Checkpoint& ckpt) {
  return TrainConfig::from_key_values(KeyValues::parse(ckpt.require_meta("config")));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-stage speech super-resolution: simulation, training, inference, evaluation"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kVersion);

  struct {
    fs::path out, in, config, resume, ckpt, manifest, report;
    int n = 10, ratio = 2, rate = 16000;
    double dur = 2.0, frame_ms = 32.0, hop_ms = 8.0;
    std::uint64_t seed = 0;
    std::string filter = "chebyshev";
    bool pcm16 = false;
  } o;

  auto* synth = app.add_subcommand("synth-corpus", "Generate a synthetic pseudo-speech corpus");
  synth->add_option("--out", o.out, "Output directory")->required();
  synth->add_option("--n", o.n, "Number of utterances")->check(CLI::PositiveNumber);
  synth->add_option("--dur", o.dur, "Duration in seconds")->check(CLI::PositiveNumber);
  synth->add_option("--seed", o.seed, "Random seed");
  synth->add_option("--rate", o.rate, "Sample rate")->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "Write LR and spline-upsampled inputs for a manifest");
  simulate->add_option("--in", o.in, "Input manifest")->required();
  simulate->add_option("--ratio", o.ratio, "Upsampling ratio")->check(CLI::PositiveNumber);
  simulate->add_option("--filter", o.filter, "chebyshev or bessel")
      ->check(CLI::IsMember({"chebyshev", "bessel"}));
  simulate->add_option("--out", o.out, "Output directory")->required();

  auto* train = app.add_subcommand("train", "Train both stages from a config file");
  train->add_option("--config", o.config, "Key-value training config")->required();
  train->add_option("--resume", o.resume, "Checkpoint to resume from");

  auto* enhance = app.add_subcommand("enhance", "Super-resolve one LR WAV file");
  enhance->add_option("--ckpt", o.ckpt, "Checkpoint")->required();
  enhance->add_option("--in", o.in, "LR input WAV")->required();
  enhance->add_option("--ratio", o.ratio, "Upsampling ratio")->check(CLI::PositiveNumber);
  enhance->add_option("--seed", o.seed, "Sampling seed");
  enhance->add_option("--out", o.out, "Output WAV")->required();
  enhance->add_flag("--pcm16", o.pcm16, "Write 16-bit PCM instead of float");

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a checkpoint against spline upsampling");
  evaluate_cmd->add_option("--ckpt", o.ckpt, "Checkpoint")->required();
  evaluate_cmd->add_option("--manifest", o.manifest, "HR manifest")->required();
  evaluate_cmd->add_option("--ratio", o.ratio, "Upsampling ratio")->check(CLI::PositiveNumber);
  evaluate_cmd->add_option("--filter", o.filter, "Simulation filter: chebyshev or bessel")
      ->check(CLI::IsMember({"chebyshev", "bessel"}));
  evaluate_cmd->add_option("--seed", o.seed, "Sampling seed");
  evaluate_cmd->add_option("--report", o.report, "Output CSV")->required();

  auto* dump = app.add_subcommand("dump-schedule", "Write the noise schedule on a 1001-point grid");
  dump->add_option("--out", o.out, "Output CSV")->required();

  auto* spec = app.add_subcommand("spectrogram", "Write an STFT magnitude matrix as CSV");
  spec->add_option("--in", o.in, "Input WAV")->required();
  spec->add_option("--out", o.out, "Output CSV")->required();
  spec->add_option("--frame-ms", o.frame_ms, "Frame length in ms")->check(CLI::PositiveNumber);
  spec->add_option("--hop-ms", o.hop_ms, "Hop in ms")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*synth) {
      const Manifest m = synth_corpus(o.out, o.n, o.dur, o.seed, o.rate);
      out << "wrote " << m.entries.size() << " utterances to " << (o.out / "manifest.tsv").string() << '\n';
    } else if (*simulate) {
      const FilterKind kind = parse_filter_kind(o.filter);
      const Manifest m = Manifest::load(o.in);
      fs::create_directories(o.out);
      Manifest lr_m, inp_m;
      for (const auto& e : m.entries) {
        const Waveform hr = read_wav(e.path);
        const LowResPair pair = simulate_lr(hr, o.ratio, kind);
        const fs::path lr_p = o.out / (e.id + "_lr.wav"), inp_p = o.out / (e.id + "_inp.wav");
        write_wav(lr_p, pair.lr);
        write_wav(inp_p, pair.inp);
        lr_m.entries.push_back({e.id, lr_p, pair.lr.sample_rate, pair.lr.size(), e.split});
        inp_m.entries.push_back({e.id, inp_p, pair.inp.sample_rate, pair.inp.size(), e.split});
      }
      lr_m.save(o.out / "lr.tsv");
      inp_m.save(o.out / "inp.tsv");
      out << "simulated " << m.entries.size() << " utterances (" << to_string(kind) << ", ratio "
          << o.ratio << ")\n";
    } else if (*train) {
      const TrainConfig cfg = TrainConfig::load(o.config);
      if (cfg.train_manifest.empty() || cfg.valid_manifest.empty()) {
        throw ConfigError("config must set data.train_manifest and data.valid_manifest");
      }
      const auto tr = load_utterances(Manifest::load(cfg.train_manifest), cfg.sample_rate);
      const auto va = load_utterances(Manifest::load(cfg.valid_manifest), cfg.sample_rate);
      Checkpoint resume;
      if (!o.resume.empty()) resume = load_checkpoint(o.resume);
      const FitResult r = fit(cfg, tr, va, o.resume.empty() ? nullptr : &resume);
      out << "trained " << r.log.steps.size() << " steps over " << r.log.epochs.size()
          << " epochs; last checkpoint " << r.last_checkpoint.string() << '\n';
    } else if (*enhance) {
      const Checkpoint ckpt = load_checkpoint(o.ckpt);
      const TrainConfig cfg = checkpoint_config(ckpt);
      const auto model = load_model(ckpt);
      const Waveform lr = read_wav(o.in);
      if (lr.sample_rate * o.ratio != cfg.sample_rate) {
        throw InvalidArgument("input rate " + std::to_string(lr.sample_rate) + " x ratio " +
                              std::to_string(o.ratio) + " does not match the model rate " +
                              std::to_string(cfg.sample_rate));
      }
      const Normalized norm = normalize(lr);
      ReverseOptions opts;
      opts.ratio = o.ratio;
      opts.kind = cfg.kind;
      auto rng = stream_rng(o.seed, 4, 0);
      Waveform est = reverse_infer(norm.wave, *model, cfg.schedule, opts, rng);
      for (double& v : est.samples) v = v * norm.std + norm.mean;
      write_wav(o.out, est, o.pcm16 ? SampleFormat::pcm16 : SampleFormat::float32);
      out << "wrote " << est.size() << " samples at " << est.sample_rate << " Hz to "
          << o.out.string() << '\n';
    } else if (*evaluate_cmd) {
      const Checkpoint ckpt = load_checkpoint(o.ckpt);
      const TrainConfig cfg = checkpoint_config(ckpt);
      const auto model = load_model(ckpt);
      const auto utts = load_utterances(Manifest::load(o.manifest), cfg.sample_rate);
      const EvalReport rep = evaluate(*model, cfg.schedule, utts, o.ratio,
                                      parse_filter_kind(o.filter), cfg.kind, o.seed);
      auto f = open_out(o.report);
      rep.write_csv(f);
      out << "mean SI-SNR " << rep.mean_enhanced.sisnr_db << " dB (baseline "
          << rep.mean_baseline.sisnr_db << "), LSD " << rep.mean_enhanced.lsd_db << " (baseline "
          << rep.mean_baseline.lsd_db << ")\n";
    } else if (*dump) {
      auto f = open_out(o.out);
      write_schedule_csv(f, NoiseSchedule{});
    } else if (*spec) {
      const Waveform w = read_wav(o.in);
      const Spectrogram s = stft(w, FrameConfig{o.frame_ms, o.hop_ms});
      auto f = open_out(o.out);
      for (int t = 0; t < s.frames; ++t) {
        for (int k = 0; k < s.bins; ++k) {
          if (k) f << ',';
          f << format_double(std::abs(s.at(t, k)));
        }
        f << '\n';
      }
    }
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace ssr
