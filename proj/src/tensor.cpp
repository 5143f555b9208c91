#include "ssr/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "ssr/error.hpp"

namespace ssr {

std::size_t shape_numel(const Shape& s) {
  std::size_t n = 1;
  for (int d : s) {
    if (d < 0) throw InvalidArgument("negative dimension in shape " + shape_str(s));
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

std::string shape_str(const Shape& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

namespace detail {

Node::~Node() {
  // Unwind long parent chains iteratively so deep graphs (recurrent steps)
  // cannot exhaust the stack on destruction.
  std::vector<std::shared_ptr<Node>> pending = std::move(parents);
  while (!pending.empty()) {
    std::shared_ptr<Node> n = std::move(pending.back());
    pending.pop_back();
    if (n && n.use_count() == 1) {
      for (auto& p : n->parents) pending.push_back(std::move(p));
      n->parents.clear();
    }
  }
}

Tensor make_result(Shape shape, std::vector<double> data, std::vector<Tensor> parents,
                   std::function<void(Node&)> backward_fn) {
  auto node = std::make_shared<Node>();
  node->shape = std::move(shape);
  node->data = std::move(data);
  if (node->data.size() != shape_numel(node->shape)) {
    throw InternalError("op produced data inconsistent with shape " + shape_str(node->shape));
  }
  const bool track = std::any_of(parents.begin(), parents.end(),
                                 [](const Tensor& t) { return t.defined() && t.requires_grad(); });
  if (track) {
    node->requires_grad = true;
    for (const Tensor& p : parents) node->parents.push_back(p.node_ptr());
    node->backward_fn = std::move(backward_fn);
  }
  return Tensor(std::move(node));
}

}  // namespace detail

using detail::make_result;
using detail::Node;

Tensor Tensor::zeros(Shape shape, bool requires_grad) { return full(std::move(shape), 0.0, requires_grad); }

Tensor Tensor::full(Shape shape, double value, bool requires_grad) {
  const std::size_t n = shape_numel(shape);
  return from(std::move(shape), std::vector<double>(n, value), requires_grad);
}

Tensor Tensor::from(Shape shape, std::vector<double> values, bool requires_grad) {
  if (values.size() != shape_numel(shape)) {
    throw InvalidArgument("tensor data size does not match shape " + shape_str(shape));
  }
  auto node = std::make_shared<Node>();
  node->shape = std::move(shape);
  node->data = std::move(values);
  node->requires_grad = requires_grad;
  return Tensor(std::move(node));
}

const Shape& Tensor::shape() const { return node_->shape; }
int Tensor::dim(int i) const { return node_->shape.at(static_cast<std::size_t>(i)); }
int Tensor::rank() const { return static_cast<int>(node_->shape.size()); }
std::size_t Tensor::numel() const { return node_->data.size(); }
std::span<const double> Tensor::data() const { return node_->data; }
std::span<double> Tensor::mutable_data() { return node_->data; }
std::span<const double> Tensor::grad() const { return node_->grad; }
std::span<double> Tensor::mutable_grad() { return node_->ensure_grad(); }
bool Tensor::has_grad() const { return node_->grad.size() == node_->data.size(); }
void Tensor::zero_grad() { std::fill(node_->grad.begin(), node_->grad.end(), 0.0); }
bool Tensor::requires_grad() const { return node_->requires_grad; }
bool Tensor::is_leaf() const { return !node_->backward_fn; }

double Tensor::item() const {
  if (numel() != 1) throw InvalidArgument("item() on tensor of shape " + shape_str(shape()));
  return node_->data[0];
}

Tensor Tensor::detach() const { return from(shape(), node_->data, false); }

void backward(const Tensor& loss) {
  if (!loss.defined() || loss.numel() != 1) {
    throw InvalidArgument("backward: loss must be a scalar");
  }
  if (!loss.requires_grad()) return;

  // Iterative post-order DFS for a topological order.
  std::vector<Node*> order;
  std::unordered_set<Node*> seen;
  std::vector<std::pair<Node*, std::size_t>> stack{{loss.node(), 0}};
  seen.insert(loss.node());
  while (!stack.empty()) {
    auto& [n, i] = stack.back();
    if (i < n->parents.size()) {
      Node* p = n->parents[i++].get();
      if (p->requires_grad && !seen.count(p)) {
        seen.insert(p);
        stack.emplace_back(p, 0);
      }
    } else {
      order.push_back(n);
      stack.pop_back();
    }
  }
  for (Node* n : order) {
    if (n->backward_fn) n->grad.assign(n->data.size(), 0.0);
  }
  loss.node()->ensure_grad()[0] += 1.0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if ((*it)->backward_fn) (*it)->backward_fn(**it);
  }
}

// ---------------------------------------------------------------------------
// Elementwise

namespace {

void check_same(const Tensor& a, const Tensor& b, const char* op) {
  if (a.shape() != b.shape()) {
    throw InvalidArgument(std::string(op) + ": shape mismatch " + shape_str(a.shape()) + " vs " +
                          shape_str(b.shape()));
  }
}

// Accumulates `g` into parent `i` if it tracks gradients.
template <typename F>
void accumulate(Node& self, std::size_t i, F&& per_element) {
  Node& p = *self.parents[i];
  if (!p.requires_grad) return;
  auto& pg = p.ensure_grad();
  for (std::size_t k = 0; k < pg.size(); ++k) pg[k] += per_element(k);
}

template <typename Fwd, typename Dfdx>
Tensor unary(const Tensor& a, Fwd f, Dfdx dfdx) {
  std::vector<double> out(a.numel());
  auto in = a.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(in[i]);
  return make_result(a.shape(), std::move(out), {a}, [dfdx](Node& self) {
    const auto& x = self.parents[0]->data;
    accumulate(self, 0, [&](std::size_t k) { return self.grad[k] * dfdx(x[k], self.data[k]); });
  });
}

}  // namespace

Tensor add(const Tensor& a, const Tensor& b) {
  check_same(a, b, "add");
  std::vector<double> out(a.numel());
  auto x = a.data(), y = b.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + y[i];
  return make_result(a.shape(), std::move(out), {a, b}, [](Node& self) {
    accumulate(self, 0, [&](std::size_t k) { return self.grad[k]; });
    accumulate(self, 1, [&](std::size_t k) { return self.grad[k]; });
  });
}

Tensor sub(const Tensor& a, const Tensor& b) {
  check_same(a, b, "sub");
  std::vector<double> out(a.numel());
  auto x = a.data(), y = b.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] - y[i];
  return make_result(a.shape(), std::move(out), {a, b}, [](Node& self) {
    accumulate(self, 0, [&](std::size_t k) { return self.grad[k]; });
    accumulate(self, 1, [&](std::size_t k) { return -self.grad[k]; });
  });
}

Tensor mul(const Tensor& a, const Tensor& b) {
  check_same(a, b, "mul");
  std::vector<double> out(a.numel());
  auto x = a.data(), y = b.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] * y[i];
  return make_result(a.shape(), std::move(out), {a, b}, [](Node& self) {
    const auto& x = self.parents[0]->data;
    const auto& y = self.parents[1]->data;
    accumulate(self, 0, [&](std::size_t k) { return self.grad[k] * y[k]; });
    accumulate(self, 1, [&](std::size_t k) { return self.grad[k] * x[k]; });
  });
}

Tensor scale(const Tensor& a, double s) {
  return unary(a, [s](double x) { return s * x; }, [s](double, double) { return s; });
}

Tensor add_scalar(const Tensor& a, double s) {
  return unary(a, [s](double x) { return x + s; }, [](double, double) { return 1.0; });
}

Tensor abs(const Tensor& a) {
  return unary(
      a, [](double x) { return std::abs(x); },
      [](double x, double) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); });
}

Tensor sigmoid(const Tensor& a) {
  return unary(
      a, [](double x) { return 1.0 / (1.0 + std::exp(-x)); },
      [](double, double y) { return y * (1.0 - y); });
}

Tensor tanh(const Tensor& a) {
  return unary(
      a, [](double x) { return std::tanh(x); }, [](double, double y) { return 1.0 - y * y; });
}

Tensor silu(const Tensor& a) {
  return unary(
      a, [](double x) { return x / (1.0 + std::exp(-x)); },
      [](double x, double) {
        const double s = 1.0 / (1.0 + std::exp(-x));
        return s * (1.0 + x * (1.0 - s));
      });
}

Tensor sum(const Tensor& a) {
  auto x = a.data();
  const double s = std::accumulate(x.begin(), x.end(), 0.0);
  return make_result({}, {s}, {a}, [](Node& self) {
    const double g = self.grad[0];
    accumulate(self, 0, [g](std::size_t) { return g; });
  });
}

Tensor mean(const Tensor& a) {
  if (a.numel() == 0) throw InvalidArgument("mean of empty tensor");
  return scale(sum(a), 1.0 / static_cast<double>(a.numel()));
}

Tensor add_channel(const Tensor& x, const Tensor& v) {
  if (x.rank() < 1 || v.rank() != 1 || v.dim(0) != x.dim(0)) {
    throw InvalidArgument("add_channel: expected x [C, ...] and v [C], got " + shape_str(x.shape()) +
                          " and " + shape_str(v.shape()));
  }
  const std::size_t channels = static_cast<std::size_t>(x.dim(0));
  const std::size_t inner = x.numel() / std::max<std::size_t>(channels, 1);
  std::vector<double> out(x.data().begin(), x.data().end());
  auto vv = v.data();
  for (std::size_t c = 0; c < channels; ++c) {
    for (std::size_t i = 0; i < inner; ++i) out[c * inner + i] += vv[c];
  }
  return make_result(x.shape(), std::move(out), {x, v}, [channels, inner](Node& self) {
    accumulate(self, 0, [&](std::size_t k) { return self.grad[k]; });
    Node& pv = *self.parents[1];
    if (!pv.requires_grad) return;
    auto& g = pv.ensure_grad();
    for (std::size_t c = 0; c < channels; ++c) {
      double s = 0.0;
      for (std::size_t i = 0; i < inner; ++i) s += self.grad[c * inner + i];
      g[c] += s;
    }
  });
}

Tensor complex_abs(const Tensor& x) {
  if (x.rank() < 1 || x.dim(0) != 2) {
    throw InvalidArgument("complex_abs: expected [2, ...], got " + shape_str(x.shape()));
  }
  Shape out_shape(x.shape().begin() + 1, x.shape().end());
  const std::size_t n = x.numel() / 2;
  auto d = x.data();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::hypot(d[i], d[n + i]);
  return make_result(std::move(out_shape), std::move(out), {x}, [n](Node& self) {
    Node& p = *self.parents[0];
    auto& g = p.ensure_grad();
    for (std::size_t i = 0; i < n; ++i) {
      const double m = self.data[i];
      if (m <= 0.0) continue;
      g[i] += self.grad[i] * p.data[i] / m;
      g[n + i] += self.grad[i] * p.data[n + i] / m;
    }
  });
}

// ---------------------------------------------------------------------------
// Shape manipulation

Tensor reshape(const Tensor& x, Shape shape) {
  if (shape_numel(shape) != x.numel()) {
    throw InvalidArgument("reshape: " + shape_str(x.shape()) + " -> " + shape_str(shape));
  }
  return make_result(std::move(shape), std::vector<double>(x.data().begin(), x.data().end()), {x},
                     [](Node& self) {
                       accumulate(self, 0, [&](std::size_t k) { return self.grad[k]; });
                     });
}

Tensor permute(const Tensor& x, const std::vector<int>& order) {
  const int r = x.rank();
  if (static_cast<int>(order.size()) != r) throw InvalidArgument("permute: rank mismatch");
  std::vector<int> check(order);
  std::sort(check.begin(), check.end());
  for (int i = 0; i < r; ++i) {
    if (check[i] != i) throw InvalidArgument("permute: order is not a permutation");
  }
  Shape out_shape(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) out_shape[i] = x.dim(order[i]);

  std::vector<std::size_t> in_stride(static_cast<std::size_t>(r), 1);
  for (int i = r - 2; i >= 0; --i) in_stride[i] = in_stride[i + 1] * x.dim(i + 1);
  // Output position -> input offset, computed once and reused by backward.
  auto index = std::make_shared<std::vector<std::size_t>>(x.numel());
  std::vector<int> counter(static_cast<std::size_t>(r), 0);
  for (std::size_t k = 0; k < x.numel(); ++k) {
    std::size_t off = 0;
    for (int i = 0; i < r; ++i) off += counter[i] * in_stride[order[i]];
    (*index)[k] = off;
    for (int i = r - 1; i >= 0; --i) {
      if (++counter[i] < out_shape[i]) break;
      counter[i] = 0;
    }
  }
  std::vector<double> out(x.numel());
  auto d = x.data();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = d[(*index)[k]];
  return make_result(std::move(out_shape), std::move(out), {x}, [index](Node& self) {
    auto& g = self.parents[0]->ensure_grad();
    for (std::size_t k = 0; k < self.grad.size(); ++k) g[(*index)[k]] += self.grad[k];
  });
}

Tensor concat0(const std::vector<Tensor>& xs) {
  if (xs.empty()) throw InvalidArgument("concat0: no inputs");
  Shape out_shape = xs[0].shape();
  if (out_shape.empty()) throw InvalidArgument("concat0: scalar input");
  out_shape[0] = 0;
  std::vector<double> out;
  std::vector<std::size_t> offsets;
  for (const Tensor& x : xs) {
    if (x.rank() != static_cast<int>(out_shape.size()) ||
        !std::equal(x.shape().begin() + 1, x.shape().end(), out_shape.begin() + 1)) {
      throw InvalidArgument("concat0: incompatible shape " + shape_str(x.shape()));
    }
    out_shape[0] += x.dim(0);
    offsets.push_back(out.size());
    out.insert(out.end(), x.data().begin(), x.data().end());
  }
  return make_result(std::move(out_shape), std::move(out), xs, [offsets](Node& self) {
    for (std::size_t i = 0; i < self.parents.size(); ++i) {
      const std::size_t off = offsets[i];
      accumulate(self, i, [&](std::size_t k) { return self.grad[off + k]; });
    }
  });
}

Tensor slice_last(const Tensor& x, int begin, int end) {
  if (x.rank() < 1) throw InvalidArgument("slice_last: scalar input");
  const int last = x.shape().back();
  if (begin < 0 || end > last || begin >= end) throw InvalidArgument("slice_last: bad range");
  const std::size_t rows = x.numel() / static_cast<std::size_t>(last);
  const int width = end - begin;
  Shape out_shape = x.shape();
  out_shape.back() = width;
  std::vector<double> out(rows * width);
  auto d = x.data();
  for (std::size_t r = 0; r < rows; ++r) {
    std::copy_n(d.begin() + static_cast<std::ptrdiff_t>(r * last + begin), width,
                out.begin() + static_cast<std::ptrdiff_t>(r * width));
  }
  return make_result(std::move(out_shape), std::move(out), {x}, [=](Node& self) {
    auto& g = self.parents[0]->ensure_grad();
    for (std::size_t r = 0; r < rows; ++r) {
      for (int k = 0; k < width; ++k) g[r * last + begin + k] += self.grad[r * width + k];
    }
  });
}

Tensor pad_last(const Tensor& x, int before, int after) {
  if (x.rank() < 1 || before < 0 || after < 0) throw InvalidArgument("pad_last: bad arguments");
  const int last = x.shape().back();
  const int width = last + before + after;
  const std::size_t rows = last ? x.numel() / static_cast<std::size_t>(last) : 0;
  Shape out_shape = x.shape();
  out_shape.back() = width;
  std::vector<double> out(shape_numel(out_shape), 0.0);
  auto d = x.data();
  for (std::size_t r = 0; r < rows; ++r) {
    std::copy_n(d.begin() + static_cast<std::ptrdiff_t>(r * last), last,
                out.begin() + static_cast<std::ptrdiff_t>(r * width + before));
  }
  return make_result(std::move(out_shape), std::move(out), {x}, [=](Node& self) {
    auto& g = self.parents[0]->ensure_grad();
    for (std::size_t r = 0; r < rows; ++r) {
      for (int k = 0; k < last; ++k) g[r * last + k] += self.grad[r * width + before + k];
    }
  });
}

Tensor slice0(const Tensor& x, int begin, int end) {
  if (x.rank() < 1 || begin < 0 || end > x.dim(0) || begin >= end) {
    throw InvalidArgument("slice0: bad range");
  }
  const std::size_t inner = x.numel() / static_cast<std::size_t>(x.dim(0));
  Shape out_shape = x.shape();
  out_shape[0] = end - begin;
  auto d = x.data();
  std::vector<double> out(d.begin() + static_cast<std::ptrdiff_t>(begin * inner),
                          d.begin() + static_cast<std::ptrdiff_t>(end * inner));
  const std::size_t off = begin * inner;
  return make_result(std::move(out_shape), std::move(out), {x}, [off](Node& self) {
    auto& g = self.parents[0]->ensure_grad();
    for (std::size_t k = 0; k < self.grad.size(); ++k) g[off + k] += self.grad[k];
  });
}

Tensor frame0(const Tensor& x, int window, int hop) {
  if (x.rank() < 1 || window < 1 || hop < 1) throw InvalidArgument("frame0: bad arguments");
  const int m = x.dim(0);
  const int s = m <= window ? 1 : (m - window + hop - 1) / hop + 1;
  const std::size_t inner = x.numel() / std::max(m, 1);
  Shape out_shape{s, window};
  out_shape.insert(out_shape.end(), x.shape().begin() + 1, x.shape().end());
  std::vector<double> out(shape_numel(out_shape), 0.0);
  auto d = x.data();
  for (int c = 0; c < s; ++c) {
    for (int k = 0; k < window; ++k) {
      const int src = c * hop + k;
      if (src >= m) break;
      std::copy_n(d.begin() + static_cast<std::ptrdiff_t>(src * inner), inner,
                  out.begin() + static_cast<std::ptrdiff_t>((c * window + k) * inner));
    }
  }
  return make_result(std::move(out_shape), std::move(out), {x}, [=](Node& self) {
    auto& g = self.parents[0]->ensure_grad();
    for (int c = 0; c < s; ++c) {
      for (int k = 0; k < window; ++k) {
        const int src = c * hop + k;
        if (src >= m) break;
        for (std::size_t i = 0; i < inner; ++i) {
          g[src * inner + i] += self.grad[(c * window + k) * inner + i];
        }
      }
    }
  });
}

Tensor overlap_add0(const Tensor& x, int length, int hop) {
  if (x.rank() < 2 || length < 1 || hop < 1) throw InvalidArgument("overlap_add0: bad arguments");
  const int s = x.dim(0), window = x.dim(1);
  const std::size_t inner = x.numel() / (static_cast<std::size_t>(s) * window);
  Shape out_shape{length};
  out_shape.insert(out_shape.end(), x.shape().begin() + 2, x.shape().end());
  std::vector<double> out(shape_numel(out_shape), 0.0);
  auto d = x.data();
  for (int c = 0; c < s; ++c) {
    for (int k = 0; k < window; ++k) {
      const int dst = c * hop + k;
      if (dst >= length) break;
      for (std::size_t i = 0; i < inner; ++i) out[dst * inner + i] += d[(c * window + k) * inner + i];
    }
  }
  return make_result(std::move(out_shape), std::move(out), {x}, [=](Node& self) {
    auto& g = self.parents[0]->ensure_grad();
    for (int c = 0; c < s; ++c) {
      for (int k = 0; k < window; ++k) {
        const int dst = c * hop + k;
        if (dst >= length) break;
        for (std::size_t i = 0; i < inner; ++i) {
          g[(c * window + k) * inner + i] += self.grad[dst * inner + i];
        }
      }
    }
  });
}

}  // namespace ssr
