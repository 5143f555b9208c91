#include "ssr/networks.hpp"

#include <cmath>
#include <random>

#include "ssr/error.hpp"

namespace ssr {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

ConvLayer make_conv(ParameterSet& ps, const std::string& name, int cin, int cout, int kt, int kf,
                    std::mt19937_64& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(cin * kt * kf));
  ConvLayer c;
  c.weight = ps.add_uniform(name + ".weight", {cout, cin, kt, kf}, bound, rng);
  c.bias = ps.add_uniform(name + ".bias", {cout}, bound, rng);
  c.spec = Conv2dSpec{1, kt / 2, kf / 2};
  return c;
}

LinearLayer make_linear(ParameterSet& ps, const std::string& name, int in, int out,
                        std::mt19937_64& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(in));
  LinearLayer l;
  l.weight = ps.add_uniform(name + ".weight", {out, in}, bound, rng);
  l.bias = ps.add_uniform(name + ".bias", {out}, bound, rng);
  return l;
}

NormLayer make_norm(ParameterSet& ps, const std::string& name, int channels, int groups) {
  NormLayer n;
  n.scale = ps.add_constant(name + ".scale", {channels}, 1.0);
  n.shift = ps.add_constant(name + ".shift", {channels}, 0.0);
  n.groups = groups;
  return n;
}

int norm_groups_for(int channels, int requested) {
  int g = std::min(requested, channels);
  while (g > 1 && channels % g != 0) --g;
  return std::max(g, 1);
}

ResidualLayer make_residual_layer(ParameterSet& ps, const std::string& name, int cin, int cout,
                                  const ArcnConfig& cfg, std::mt19937_64& rng) {
  ResidualLayer r;
  const int groups = norm_groups_for(cout, cfg.norm_groups);
  r.conv1 = make_conv(ps, name + ".conv1", cin, cout, 1, 3, rng);
  r.norm1 = make_norm(ps, name + ".norm1", cout, groups);
  r.conv2 = make_conv(ps, name + ".conv2", cout, cout, 1, 3, rng);
  r.norm2 = make_norm(ps, name + ".norm2", cout, groups);
  r.mask_proj.weight = ps.add_uniform(name + ".mask.weight", {cout, 1, 1, 1}, 1.0, rng);
  r.mask_proj.bias = ps.add_constant(name + ".mask.bias", {cout}, 1.0);
  r.temb_proj = make_linear(ps, name + ".temb", cfg.temb_dim, cout, rng);
  if (cin != cout) r.skip = make_conv(ps, name + ".skip", cin, cout, 1, 1, rng);
  return r;
}

Tensor lossmap_tensor(const Lossmap& m, int bins) {
  if (m.bins < bins) throw InvalidArgument("lossmap has fewer bins than the network");
  std::vector<double> v(static_cast<std::size_t>(m.frames) * bins);
  for (int t = 0; t < m.frames; ++t) {
    for (int f = 0; f < bins; ++f) v[static_cast<std::size_t>(t) * bins + f] = m.at(t, f);
  }
  return Tensor::from({1, m.frames, bins}, std::move(v));
}

GruLayer make_gru(ParameterSet& ps, const std::string& name, int hidden, std::mt19937_64& rng) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(hidden));
  GruLayer g;
  g.hidden = hidden;
  g.weights.w_ih = ps.add_uniform(name + ".w_ih", {3 * hidden, hidden}, bound, rng);
  g.weights.w_hh = ps.add_uniform(name + ".w_hh", {3 * hidden, hidden}, bound, rng);
  g.weights.b_ih = ps.add_uniform(name + ".b_ih", {3 * hidden}, bound, rng);
  g.weights.b_hh = ps.add_uniform(name + ".b_hh", {3 * hidden}, bound, rng);
  return g;
}

SequenceAttention make_seq_attention(ParameterSet& ps, const std::string& name, int hidden,
                                     std::mt19937_64& rng) {
  SequenceAttention a;
  a.query = make_linear(ps, name + ".query", hidden, hidden, rng);
  a.key = make_linear(ps, name + ".key", hidden, hidden, rng);
  a.value = make_linear(ps, name + ".value", hidden, hidden, rng);
  a.out = make_linear(ps, name + ".out", hidden, hidden, rng);
  return a;
}

// 1 / (number of windows covering each position) for overlap-add of S windows.
Tensor overlap_norm(int windows, int window, int hop, int length, int inner) {
  std::vector<double> count(static_cast<std::size_t>(length), 0.0);
  for (int c = 0; c < windows; ++c) {
    for (int k = 0; k < window && c * hop + k < length; ++k) count[c * hop + k] += 1.0;
  }
  std::vector<double> v(static_cast<std::size_t>(length) * inner);
  for (int i = 0; i < length; ++i) {
    const double s = count[i] > 0 ? 1.0 / count[i] : 0.0;
    for (int j = 0; j < inner; ++j) v[static_cast<std::size_t>(i) * inner + j] = s;
  }
  return Tensor::from({length, inner}, std::move(v));
}

}  // namespace

AttentionLayer make_attention_layer(ParameterSet& ps, const std::string& name, int channels,
                                    int embed, std::mt19937_64& rng) {
  AttentionLayer a;
  a.query = make_conv(ps, name + ".query", channels, embed, 1, 1, rng);
  a.key = make_conv(ps, name + ".key", channels, embed, 1, 1, rng);
  a.value = make_conv(ps, name + ".value", channels, channels, 1, 1, rng);
  return a;
}

ResidualBlock make_residual_block(ParameterSet& ps, const std::string& name, BlockKind kind,
                                  int cin, int channels, const ArcnConfig& cfg,
                                  std::mt19937_64& rng) {
  ResidualBlock b;
  b.kind = kind;
  b.first = make_residual_layer(ps, name + ".layer1", cin, channels, cfg, rng);
  b.second = make_residual_layer(ps, name + ".layer2", channels, channels, cfg, rng);
  b.attention = make_attention_layer(ps, name + ".attention", channels, cfg.attention_embed, rng);
  return b;
}

// ---------------------------------------------------------------------------
// Configs

void ArcnConfig::validate() const {
  if (base_channels < 1 || encoder_blocks < 1 || bottleneck_blocks < 1 || attention_embed < 1 ||
      norm_groups < 1 || total_steps < 1) {
    throw ConfigError("arcn: sizes must be positive");
  }
  if (input_kernel < 1 || input_kernel % 2 == 0) throw ConfigError("arcn: input kernel must be odd");
  if (temb_dim < 2 || temb_dim % 2 != 0) throw ConfigError("arcn: temb_dim must be even");
  const int fl = frame_len();
  if (fl % 2 != 0) throw ConfigError("arcn: STFT frame length must be even");
  if (network_bins() % (1 << encoder_blocks) != 0) {
    throw ConfigError("arcn: network bins must be divisible by 2^encoder_blocks");
  }
}

ArcnConfig ArcnConfig::full_scale() {
  ArcnConfig c;
  c.stft = FrameConfig{32.0, 8.0};
  c.base_channels = 64;
  c.encoder_blocks = 5;
  c.attention_embed = 5;
  c.temb_dim = 128;
  return c;
}

ArcnConfig ArcnConfig::tiny() {
  ArcnConfig c;
  c.stft = FrameConfig{1.0, 0.25};
  c.base_channels = 4;
  c.input_kernel = 3;
  c.encoder_blocks = 1;
  c.attention_embed = 2;
  c.norm_groups = 2;
  c.temb_dim = 4;
  return c;
}

void ArcnConfig::write(KeyValues& kv, const std::string& p) const {
  kv.set(p + "sample_rate", sample_rate);
  kv.set(p + "frame_ms", stft.frame_ms);
  kv.set(p + "hop_ms", stft.hop_ms);
  kv.set(p + "base_channels", base_channels);
  kv.set(p + "input_kernel", input_kernel);
  kv.set(p + "encoder_blocks", encoder_blocks);
  kv.set(p + "bottleneck_blocks", bottleneck_blocks);
  kv.set(p + "attention_embed", attention_embed);
  kv.set(p + "norm_groups", norm_groups);
  kv.set(p + "temb_dim", temb_dim);
  kv.set(p + "total_steps", total_steps);
}

ArcnConfig ArcnConfig::read(const KeyValues& kv, const std::string& p) {
  ArcnConfig c;
  c.sample_rate = kv.get_int(p + "sample_rate", c.sample_rate);
  c.stft.frame_ms = kv.get_double(p + "frame_ms", c.stft.frame_ms);
  c.stft.hop_ms = kv.get_double(p + "hop_ms", c.stft.hop_ms);
  c.base_channels = kv.get_int(p + "base_channels", c.base_channels);
  c.input_kernel = kv.get_int(p + "input_kernel", c.input_kernel);
  c.encoder_blocks = kv.get_int(p + "encoder_blocks", c.encoder_blocks);
  c.bottleneck_blocks = kv.get_int(p + "bottleneck_blocks", c.bottleneck_blocks);
  c.attention_embed = kv.get_int(p + "attention_embed", c.attention_embed);
  c.norm_groups = kv.get_int(p + "norm_groups", c.norm_groups);
  c.temb_dim = kv.get_int(p + "temb_dim", c.temb_dim);
  c.total_steps = kv.get_int(p + "total_steps", c.total_steps);
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("arcn: ") + e.what());
  }
  return c;
}

void DparnConfig::validate() const {
  if (frame_len < 2 || frame_hop < 1 || frame_hop > frame_len) {
    throw ConfigError("dparn: frame_hop must lie in [1, frame_len]");
  }
  if (hidden < 1) throw ConfigError("dparn: hidden must be positive");
  if (chunk_len < 1 || chunk_hop < 1 || chunk_hop > chunk_len) {
    throw ConfigError("dparn: chunk_hop must lie in [1, chunk_len]");
  }
  if (num_blocks < 1) throw ConfigError("dparn: num_blocks must be at least 1");
}

std::size_t DparnConfig::min_length() const {
  return static_cast<std::size_t>(frame_len + (chunk_len - 1) * frame_hop);
}

DparnConfig DparnConfig::tiny() {
  DparnConfig c;
  c.frame_len = 4;
  c.frame_hop = 2;
  c.hidden = 3;
  c.chunk_len = 4;
  c.chunk_hop = 2;
  c.num_blocks = 2;
  return c;
}

void DparnConfig::write(KeyValues& kv, const std::string& p) const {
  kv.set(p + "frame_len", frame_len);
  kv.set(p + "frame_hop", frame_hop);
  kv.set(p + "hidden", hidden);
  kv.set(p + "chunk_len", chunk_len);
  kv.set(p + "chunk_hop", chunk_hop);
  kv.set(p + "num_blocks", num_blocks);
}

DparnConfig DparnConfig::read(const KeyValues& kv, const std::string& p) {
  DparnConfig c;
  c.frame_len = kv.get_int(p + "frame_len", c.frame_len);
  c.frame_hop = kv.get_int(p + "frame_hop", c.frame_hop);
  c.hidden = kv.get_int(p + "hidden", c.hidden);
  c.chunk_len = kv.get_int(p + "chunk_len", c.chunk_len);
  c.chunk_hop = kv.get_int(p + "chunk_hop", c.chunk_hop);
  c.num_blocks = kv.get_int(p + "num_blocks", c.num_blocks);
  c.validate();
  return c;
}

// ---------------------------------------------------------------------------
// ARCN layers

std::vector<double> fourier_features(int step, int dim) {
  if (dim < 2 || dim % 2 != 0) throw InvalidArgument("fourier_features: dim must be even");
  const int half = dim / 2;
  std::vector<double> out(static_cast<std::size_t>(dim));
  for (int k = 0; k < half; ++k) {
    const double frac = half == 1 ? 0.0 : static_cast<double>(k) / (half - 1);
    const double w = std::pow(1e-4, frac);
    out[k] = std::sin(w * step);
    out[half + k] = std::cos(w * step);
  }
  return out;
}

Tensor TimeEmbedding::operator()(int step) const {
  if (step < 0 || step >= max_step) {
    throw InvalidArgument("time embedding: step " + std::to_string(step) + " outside [0, " +
                          std::to_string(max_step) + ")");
  }
  Tensor f = Tensor::from({dim}, fourier_features(step, dim));
  return second(silu(first(f)));
}

Tensor AttentionLayer::operator()(const Tensor& x) const {
  if (x.rank() != 3) throw InvalidArgument("attention: expected [C, T, F]");
  const int c = x.dim(0), t = x.dim(1), f = x.dim(2);
  const int e = query.weight.dim(0);
  auto rows = [&](const Tensor& y, int ch) {
    return reshape(permute(y, {1, 0, 2}), {t, ch * f});
  };
  Tensor q = rows(query(x), e);
  Tensor k = rows(key(x), e);
  Tensor v = rows(value(x), c);
  Tensor p = softmax_last(matmul(q, transpose_last(k)));
  Tensor a = permute(reshape(matmul(p, v), {t, c, f}), {1, 0, 2});
  return add(x, a);
}

Tensor ResidualLayer::operator()(const Tensor& x, const Tensor& temb, const Tensor& mask) const {
  Tensor a = conv1(x);
  if (mask.dim(1) != a.dim(1) || mask.dim(2) != a.dim(2)) {
    throw InvalidArgument("residual layer: lossmap " + shape_str(mask.shape()) +
                          " does not match features " + shape_str(a.shape()));
  }
  a = mul(a, mask_proj(mask));
  a = add_channel(a, temb_proj(temb));
  a = silu(norm1(a));
  Tensor b = silu(norm2(conv2(a)));
  return add(b, skip.weight.defined() ? skip(x) : x);
}

Tensor ResidualBlock::operator()(const Tensor& x, const Tensor& temb, const Tensor& mask) const {
  Tensor h;
  if (kind == BlockKind::bottleneck) {
    h = second(attention(first(x, temb, mask)), temb, mask);
  } else {
    h = attention(second(first(x, temb, mask), temb, mask));
  }
  if (kind == BlockKind::encoder) return fir_resample_freq(h, FreqResample::down);
  if (kind == BlockKind::decoder) return fir_resample_freq(h, FreqResample::up);
  return h;
}

Tensor pool_mask(const Tensor& mask) {
  const int t = mask.dim(1), f = mask.dim(2);
  if (f % 2 != 0) throw InvalidArgument("pool_mask: odd bin count");
  std::vector<double> out(static_cast<std::size_t>(t) * (f / 2));
  auto d = mask.data();
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < f / 2; ++j) {
      const std::size_t src = static_cast<std::size_t>(i) * f + 2 * j;
      out[static_cast<std::size_t>(i) * (f / 2) + j] = std::max(d[src], d[src + 1]);
    }
  }
  return Tensor::from({1, t, f / 2}, std::move(out));
}

Arcn::Arcn(const ArcnConfig& cfg, std::uint64_t seed) : cfg_(cfg) {
  cfg_.validate();
  auto rng = make_rng(seed, 0xA7C7);
  const int c = cfg_.base_channels;
  temb_.dim = cfg_.temb_dim;
  temb_.max_step = cfg_.total_steps;
  temb_.first = make_linear(params_, "temb.linear1", cfg_.temb_dim, cfg_.temb_dim, rng);
  temb_.second = make_linear(params_, "temb.linear2", cfg_.temb_dim, cfg_.temb_dim, rng);
  const int k = cfg_.input_kernel;
  in_conv_ = make_conv(params_, "input", 6, c, k, k, rng);
  for (int i = 0; i < cfg_.encoder_blocks; ++i) {
    encoder_.push_back(make_residual_block(params_, "encoder." + std::to_string(i),
                                           BlockKind::encoder, c, c, cfg_, rng));
  }
  for (int i = 0; i < cfg_.bottleneck_blocks; ++i) {
    bottleneck_.push_back(make_residual_block(params_, "bottleneck." + std::to_string(i),
                                              BlockKind::bottleneck, c, c, cfg_, rng));
  }
  for (int i = 0; i < cfg_.encoder_blocks; ++i) {
    decoder_.push_back(make_residual_block(params_, "decoder." + std::to_string(i),
                                           BlockKind::decoder, 2 * c, c, cfg_, rng));
  }
  final_ = make_residual_block(params_, "final", BlockKind::plain, c, c, cfg_, rng);
  out_conv_ = make_conv(params_, "output", c, 2, k, k, rng);
}

Lossmap Arcn::lossmap_for(std::size_t n, int ratio) const {
  const int fl = cfg_.frame_len();
  return build_lossmap(stft_frame_count(n, fl, cfg_.hop()), fl / 2 + 1, ratio, fl,
                       cfg_.sample_rate);
}

Tensor Arcn::forward(const Tensor& x_t, const Tensor& s_pred, const Tensor& s_inp,
                     const Lossmap& lossmap, int step) const {
  if (x_t.rank() != 1 || s_pred.shape() != x_t.shape() || s_inp.shape() != x_t.shape()) {
    throw InvalidArgument("arcn: inputs must be equal-length waveforms");
  }
  const int n = x_t.dim(0);
  const int fl = cfg_.frame_len(), hop = cfg_.hop(), bins = cfg_.network_bins();
  auto spec = [&](const Tensor& w) { return slice_last(stft(w, fl, hop), 0, bins); };
  Tensor h = concat0({spec(x_t), spec(s_pred), spec(s_inp)});
  if (lossmap.frames != h.dim(1)) {
    throw InvalidArgument("arcn: lossmap has " + std::to_string(lossmap.frames) +
                          " frames, expected " + std::to_string(h.dim(1)));
  }
  Tensor temb = temb_(step);

  std::vector<Tensor> masks{lossmap_tensor(lossmap, bins)};
  for (int i = 0; i < cfg_.encoder_blocks; ++i) masks.push_back(pool_mask(masks.back()));

  h = in_conv_(h);
  std::vector<Tensor> skips;
  for (int i = 0; i < cfg_.encoder_blocks; ++i) {
    h = encoder_[i](h, temb, masks[i]);
    skips.push_back(h);
  }
  for (const auto& b : bottleneck_) h = b(h, temb, masks.back());
  for (int j = 0; j < cfg_.encoder_blocks; ++j) {
    const int level = cfg_.encoder_blocks - j;
    h = decoder_[j](concat0({h, skips[level - 1]}), temb, masks[level]);
  }
  h = final_(h, temb, masks[0]);
  Tensor out = pad_last(out_conv_(h), 0, 1);
  return add(s_inp, istft(out, fl, hop, n));
}

Waveform Arcn::forward(const Waveform& x_t, const Waveform& s_pred, const Waveform& s_inp,
                       const Lossmap& lossmap, int step) const {
  if (x_t.size() != s_pred.size() || x_t.size() != s_inp.size()) {
    throw InvalidArgument("arcn: inputs must be equal-length waveforms");
  }
  return to_waveform(forward(to_tensor(x_t), to_tensor(s_pred), to_tensor(s_inp), lossmap, step),
                     s_inp.sample_rate);
}

// ---------------------------------------------------------------------------
// DPARN

Tensor GruLayer::operator()(const Tensor& x) const {
  const int b = x.dim(0), len = x.dim(1);
  Tensor seq = permute(x, {1, 0, 2});
  Tensor h = Tensor::zeros({b, hidden});
  std::vector<Tensor> outs;
  outs.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    h = gru_cell(reshape(slice0(seq, i, i + 1), {b, x.dim(2)}), h, weights);
    outs.push_back(reshape(h, {1, b, hidden}));
  }
  return permute(concat0(outs), {1, 0, 2});
}

Tensor SequenceAttention::operator()(const Tensor& x) const {
  const double s = 1.0 / std::sqrt(static_cast<double>(x.dim(2)));
  Tensor w = scale(matmul(query(x), transpose_last(key(x))), s);
  return out(matmul(softmax_last(w), value(x)));
}

Tensor DualPathBlock::operator()(const Tensor& x) const {
  Tensor h = add(x, intra_proj(intra_rnn(x)));
  h = add(h, intra_attn(h));
  Tensor g = permute(h, {1, 0, 2});
  g = add(g, inter_proj(inter_rnn(g)));
  g = add(g, inter_attn(g));
  return permute(g, {1, 0, 2});
}

Dparn::Dparn(const DparnConfig& cfg, std::uint64_t seed) : cfg_(cfg) {
  cfg_.validate();
  auto rng = make_rng(seed, 0xD9A7);
  const int hdim = cfg_.hidden;
  encoder_ = make_linear(params_, "encoder", cfg_.frame_len, hdim, rng);
  for (int i = 0; i < cfg_.num_blocks; ++i) {
    const std::string p = "block." + std::to_string(i);
    DualPathBlock b;
    b.intra_rnn = make_gru(params_, p + ".intra_rnn", hdim, rng);
    b.intra_proj = make_linear(params_, p + ".intra_proj", hdim, hdim, rng);
    b.intra_attn = make_seq_attention(params_, p + ".intra_attn", hdim, rng);
    b.inter_rnn = make_gru(params_, p + ".inter_rnn", hdim, rng);
    b.inter_proj = make_linear(params_, p + ".inter_proj", hdim, hdim, rng);
    b.inter_attn = make_seq_attention(params_, p + ".inter_attn", hdim, rng);
    blocks_.push_back(std::move(b));
  }
  decoder_ = make_linear(params_, "decoder", hdim, cfg_.frame_len, rng);
}

Tensor Dparn::forward(const Tensor& s_inp) const {
  if (s_inp.rank() != 1) throw InvalidArgument("dparn: expected a waveform");
  const int n = s_inp.dim(0);
  if (static_cast<std::size_t>(n) < cfg_.min_length()) {
    throw InvalidArgument("dparn: input of " + std::to_string(n) +
                          " samples is shorter than one chunk (" +
                          std::to_string(cfg_.min_length()) + ")");
  }
  const int fl = cfg_.frame_len, fh = cfg_.frame_hop;
  Tensor frames = frame0(reshape(s_inp, {n, 1}), fl, fh);
  const int m = frames.dim(0);
  Tensor feats = encoder_(reshape(frames, {m, fl}));

  Tensor chunks = frame0(feats, cfg_.chunk_len, cfg_.chunk_hop);
  for (const auto& b : blocks_) chunks = b(chunks);
  const int s = chunks.dim(0);
  feats = mul(overlap_add0(chunks, m, cfg_.chunk_hop),
              overlap_norm(s, cfg_.chunk_len, cfg_.chunk_hop, m, cfg_.hidden));

  Tensor dec = reshape(decoder_(feats), {m, fl, 1});
  Tensor wave = mul(overlap_add0(dec, n, fh), overlap_norm(m, fl, fh, n, 1));
  return add(s_inp, reshape(wave, {n}));
}

Waveform Dparn::forward(const Waveform& s_inp) const {
  return to_waveform(forward(to_tensor(s_inp)), s_inp.sample_rate);
}

SrModel::SrModel(const DparnConfig& dcfg, const ArcnConfig& acfg, std::uint64_t seed)
    : dparn(dcfg, seed), arcn(acfg, seed) {
  params.extend(dparn.parameters(), "dparn.");
  params.extend(arcn.parameters(), "arcn.");
}

Tensor to_tensor(const Waveform& w) {
  return Tensor::from({static_cast<int>(w.size())}, w.samples);
}

Waveform to_waveform(const Tensor& t, int sample_rate) {
  auto d = t.data();
  return Waveform(std::vector<double>(d.begin(), d.end()), sample_rate);
}

}  // namespace ssr
