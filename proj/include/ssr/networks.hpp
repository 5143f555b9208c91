#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssr/config.hpp"
#include "ssr/optim.hpp"
#include "ssr/resample.hpp"
#include "ssr/signal.hpp"
#include "ssr/tensor.hpp"

namespace ssr {

/// Diffusion-stage UNet over complex spectrograms.
struct ArcnConfig {
  int sample_rate = 16000;
  FrameConfig stft{8.0, 2.0};
  int base_channels = 16;
  int input_kernel = 7;
  int encoder_blocks = 3;  ///< decoder mirrors the encoder
  int bottleneck_blocks = 1;
  int attention_embed = 5;
  int norm_groups = 4;
  int temb_dim = 32;
  int total_steps = 1000;

  int frame_len() const { return stft.frame_len(sample_rate); }
  int hop() const { return stft.hop(sample_rate); }
  /// Bins seen by the network: the Nyquist bin is dropped.
  int network_bins() const { return frame_len() / 2; }
  void validate() const;

  /// 64 channels, 5 encoder/decoder blocks, 32/8 ms STFT (256 network bins).
  static ArcnConfig full_scale();
  /// Small enough for finite-difference checks.
  static ArcnConfig tiny();

  void write(KeyValues& kv, const std::string& prefix) const;
  static ArcnConfig read(const KeyValues& kv, const std::string& prefix);
};

/// Time-domain dual-path predictive stage.
struct DparnConfig {
  int frame_len = 16;  ///< samples per encoder frame
  int frame_hop = 8;
  int hidden = 64;
  int chunk_len = 32;  ///< frames per chunk
  int chunk_hop = 16;
  int num_blocks = 2;

  void validate() const;
  /// Shortest input the network accepts: one full chunk.
  std::size_t min_length() const;
  static DparnConfig tiny();

  void write(KeyValues& kv, const std::string& prefix) const;
  static DparnConfig read(const KeyValues& kv, const std::string& prefix);
};

/// Sinusoidal features [sin(w_k s), cos(w_k s)] with w_k geometric from 1 to
/// 1e-4, for integer step s.
std::vector<double> fourier_features(int step, int dim);

struct ConvLayer {
  Tensor weight, bias;
  Conv2dSpec spec;
  Tensor operator()(const Tensor& x) const { return conv2d(x, weight, bias, spec); }
};

struct NormLayer {
  Tensor scale, shift;
  int groups = 1;
  Tensor operator()(const Tensor& x) const { return group_norm(x, groups, scale, shift); }
};

struct LinearLayer {
  Tensor weight, bias;
  Tensor operator()(const Tensor& x) const { return linear(x, weight, bias); }
};

struct TimeEmbedding {
  int dim = 0;
  int max_step = 0;
  LinearLayer first, second;

  /// linear -> SiLU -> linear on the Fourier features of `step` in [0, max_step).
  Tensor operator()(int step) const;
};

/// Q/K/V pointwise convolutions and frame-wise softmax attention with a
/// residual merge.
struct AttentionLayer {
  ConvLayer query, key, value;
  Tensor operator()(const Tensor& x) const;
};

/// [conv 1x3 -> group norm -> SiLU] x 2 with a skip; the lossmap multiplies
/// and the time embedding is added to the first convolution output.
struct ResidualLayer {
  ConvLayer conv1, conv2, mask_proj;
  ConvLayer skip;  ///< 1x1, only when input and output widths differ
  NormLayer norm1, norm2;
  LinearLayer temb_proj;

  Tensor operator()(const Tensor& x, const Tensor& temb, const Tensor& mask) const;
};

enum class BlockKind { encoder, decoder, bottleneck, plain };

struct ResidualBlock {
  BlockKind kind = BlockKind::plain;
  ResidualLayer first, second;
  AttentionLayer attention;

  Tensor operator()(const Tensor& x, const Tensor& temb, const Tensor& mask) const;
};

AttentionLayer make_attention_layer(ParameterSet& ps, const std::string& name, int channels,
                                    int embed, std::mt19937_64& rng);

/// Two residual layers (cin -> channels -> channels) and an attention layer
/// with parameters registered under `name`.
ResidualBlock make_residual_block(ParameterSet& ps, const std::string& name, BlockKind kind,
                                  int cin, int channels, const ArcnConfig& cfg,
                                  std::mt19937_64& rng);

/// Halves the frequency axis of a [1, T, F] mask by max pooling.
Tensor pool_mask(const Tensor& mask);

class Arcn {
 public:
  Arcn(const ArcnConfig& cfg, std::uint64_t seed);

  const ArcnConfig& config() const { return cfg_; }
  ParameterSet& parameters() { return params_; }
  const ParameterSet& parameters() const { return params_; }

  /// Waveforms [N] -> estimate [N] = s_inp + iSTFT(network output).
  Tensor forward(const Tensor& x_t, const Tensor& s_pred, const Tensor& s_inp,
                 const Lossmap& lossmap, int step) const;
  Waveform forward(const Waveform& x_t, const Waveform& s_pred, const Waveform& s_inp,
                   const Lossmap& lossmap, int step) const;

  /// Lossmap sized for this network's STFT of an n-sample input.
  Lossmap lossmap_for(std::size_t n, int ratio) const;

  /// Final 7x7 projection to (Re, Im); zeroing it makes the model return s_inp.
  ConvLayer& output_conv() { return out_conv_; }
  const TimeEmbedding& time_embedding() const { return temb_; }
  const std::vector<ResidualBlock>& encoder() const { return encoder_; }
  const std::vector<ResidualBlock>& decoder() const { return decoder_; }

 private:
  ArcnConfig cfg_;
  ParameterSet params_;
  TimeEmbedding temb_;
  ConvLayer in_conv_, out_conv_;
  std::vector<ResidualBlock> encoder_, bottleneck_, decoder_;
  ResidualBlock final_;
};

struct GruLayer {
  GruWeights weights;
  int hidden = 0;
  /// Runs over dimension 1 of x [B, L, H] from a zero state; returns [B, L, H].
  Tensor operator()(const Tensor& x) const;
};

/// Scaled dot-product self-attention over dimension 1 of x [B, L, H].
struct SequenceAttention {
  LinearLayer query, key, value, out;
  Tensor operator()(const Tensor& x) const;
};

struct DualPathBlock {
  GruLayer intra_rnn, inter_rnn;
  LinearLayer intra_proj, inter_proj;
  SequenceAttention intra_attn, inter_attn;

  /// x [S, K, H] (chunks x positions x features)
  Tensor operator()(const Tensor& x) const;
};

class Dparn {
 public:
  Dparn(const DparnConfig& cfg, std::uint64_t seed);

  const DparnConfig& config() const { return cfg_; }
  ParameterSet& parameters() { return params_; }
  const ParameterSet& parameters() const { return params_; }

  /// s_inp [N] -> s_pred [N] = s_inp + network(s_inp).
  Tensor forward(const Tensor& s_inp) const;
  Waveform forward(const Waveform& s_inp) const;

  /// Projection from features back to frames; zeroing it yields s_pred = s_inp.
  LinearLayer& output_proj() { return decoder_; }

 private:
  DparnConfig cfg_;
  ParameterSet params_;
  LinearLayer encoder_, decoder_;
  std::vector<DualPathBlock> blocks_;
};

/// Both stages with a joint parameter set ("dparn." and "arcn." prefixes).
struct SrModel {
  SrModel(const DparnConfig& dcfg, const ArcnConfig& acfg, std::uint64_t seed);
  SrModel(const SrModel&) = delete;
  SrModel& operator=(const SrModel&) = delete;

  Dparn dparn;
  Arcn arcn;
  ParameterSet params;
};

Tensor to_tensor(const Waveform& w);
Waveform to_waveform(const Tensor& t, int sample_rate);

}  // namespace ssr
