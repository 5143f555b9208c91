#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ssr {

using Shape = std::vector<int>;

std::size_t shape_numel(const Shape& s);
std::string shape_str(const Shape& s);

namespace detail {
struct Node;
}

/// Dense 64-bit tensor with reverse-mode differentiation. A Tensor is a cheap
/// handle; copies share storage and graph history.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from(Shape shape, std::vector<double> values, bool requires_grad = false);
  static Tensor scalar(double v) { return from({}, {v}); }

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  int dim(int i) const;
  int rank() const;
  std::size_t numel() const;

  std::span<const double> data() const;
  std::span<double> mutable_data();
  /// Gradient accumulator; empty until a backward pass reaches this tensor.
  std::span<const double> grad() const;
  std::span<double> mutable_grad();
  bool has_grad() const;
  void zero_grad();

  bool requires_grad() const;
  bool is_leaf() const;
  double item() const;

  /// Same values, no history.
  Tensor detach() const;

  detail::Node* node() const { return node_.get(); }
  const std::shared_ptr<detail::Node>& node_ptr() const { return node_; }
  explicit Tensor(std::shared_ptr<detail::Node> n) : node_(std::move(n)) {}

 private:
  std::shared_ptr<detail::Node> node_;
};

/// Populates gradients of every reachable tensor that requires them.
/// Leaf gradients accumulate across calls; interior gradients are reset.
void backward(const Tensor& loss);

namespace detail {

struct Node {
  Shape shape;
  std::vector<double> data;
  std::vector<double> grad;
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> parents;
  // Reads this->grad and accumulates into the parents' grads.
  std::function<void(Node&)> backward_fn;

  Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;
  ~Node();

  std::vector<double>& ensure_grad() {
    if (grad.size() != data.size()) grad.assign(data.size(), 0.0);
    return grad;
  }
};

/// Builds the result node of an op. Gradient tracking is enabled when any
/// parent requires it; otherwise the closure is dropped.
Tensor make_result(Shape shape, std::vector<double> data, std::vector<Tensor> parents,
                   std::function<void(Node&)> backward_fn);

}  // namespace detail

// ---------------------------------------------------------------------------
// Elementwise and reductions

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);
Tensor add_scalar(const Tensor& a, double s);
Tensor abs(const Tensor& a);
Tensor sigmoid(const Tensor& a);
Tensor tanh(const Tensor& a);
Tensor silu(const Tensor& a);
Tensor sum(const Tensor& a);
Tensor mean(const Tensor& a);

/// x[c, ...] + v[c], broadcast over trailing dimensions.
Tensor add_channel(const Tensor& x, const Tensor& v);

/// sqrt(re^2 + im^2) for x = [2, ...] holding (re, im); the subgradient at 0 is 0.
Tensor complex_abs(const Tensor& x);

// ---------------------------------------------------------------------------
// Shape manipulation

Tensor reshape(const Tensor& x, Shape shape);
Tensor permute(const Tensor& x, const std::vector<int>& order);
/// Concatenation along dimension 0.
Tensor concat0(const std::vector<Tensor>& xs);
/// x[..., begin:end] on the last dimension.
Tensor slice_last(const Tensor& x, int begin, int end);
/// Zero padding on the last dimension.
Tensor pad_last(const Tensor& x, int before, int after);
/// x[begin:end, ...] on the first dimension.
Tensor slice0(const Tensor& x, int begin, int end);

/// Splits dimension 0 of x [M, ...] into overlapping windows [S, K, ...] with
/// stride `hop`, zero-padding the tail. S = max(1, ceil((M - K) / hop) + 1).
Tensor frame0(const Tensor& x, int window, int hop);
/// Adjoint of frame0: sums windows [S, K, ...] back onto [M, ...].
Tensor overlap_add0(const Tensor& x, int length, int hop);

// ---------------------------------------------------------------------------
// Linear algebra and network primitives

/// [M, K] x [K, N] or batched [B, M, K] x [B, K, N].
Tensor matmul(const Tensor& a, const Tensor& b);
/// Swap the last two dimensions.
Tensor transpose_last(const Tensor& x);
Tensor softmax_last(const Tensor& x);

/// x [..., in] W^T + b with W [out, in], b [out] (b may be undefined).
Tensor linear(const Tensor& x, const Tensor& weight, const Tensor& bias);

struct Conv2dSpec {
  int stride = 1;
  int pad_t = 0;
  int pad_f = 0;
};

/// Cross-correlation of x [Cin, T, F] with w [Cout, Cin, kT, kF] plus bias [Cout].
Tensor conv2d(const Tensor& x, const Tensor& weight, const Tensor& bias, Conv2dSpec spec);

inline constexpr double kGroupNormEps = 1e-5;

/// Group normalization of x [C, ...] with per-channel affine (scale, shift).
Tensor group_norm(const Tensor& x, int groups, const Tensor& scale, const Tensor& shift,
                  double eps = kGroupNormEps);

struct GruWeights {
  Tensor w_ih;  ///< [3H, In], gate order (reset, update, candidate)
  Tensor w_hh;  ///< [3H, H]
  Tensor b_ih;  ///< [3H]
  Tensor b_hh;  ///< [3H]
};

/// One GRU step on a batch: x [B, In], h [B, H] -> [B, H].
Tensor gru_cell(const Tensor& x, const Tensor& h, const GruWeights& w);

enum class FreqResample { down, up };

/// Binomial [1, 2, 1] / 4 blur along the last axis with reflect padding,
/// followed by stride-2 decimation (down) or preceded by zero insertion and
/// scaled by 2 (up).
Tensor fir_resample_freq(const Tensor& x, FreqResample direction);

// ---------------------------------------------------------------------------
// Differentiable STFT pair (Hann, zero padding of frame_len - hop at both ends)

/// x [N] -> [2, T, F] holding real and imaginary parts.
Tensor stft(const Tensor& x, int frame_len, int hop);
/// [2, T, F] -> [length]
Tensor istft(const Tensor& spec, int frame_len, int hop, int length);

}  // namespace ssr
