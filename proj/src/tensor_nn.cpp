#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "ssr/error.hpp"
#include "ssr/tensor.hpp"

namespace ssr {

using detail::make_result;
using detail::Node;

namespace {

struct BatchDims {
  int batch, rows, inner, cols;
};

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CMatMap = Eigen::Map<const RowMat>;

// dst (+)= op(A) op(B) for row-major A [ar, ac] and B [br, bc]. Operands are
// copied into Eigen-owned aligned storage first: Eigen peels unaligned heads
// off vectorized loops, so products over raw heap pointers would otherwise
// change summation order with allocation addresses.
void gemm(double* dst, bool accumulate, const double* a, Eigen::Index ar, Eigen::Index ac, bool ta,
          const double* b, Eigen::Index br, Eigen::Index bc, bool tb) {
  const RowMat A = CMatMap(a, ar, ac), B = CMatMap(b, br, bc);
  RowMat C;
  if (ta && tb) {
    C.noalias() = A.transpose() * B.transpose();
  } else if (ta) {
    C.noalias() = A.transpose() * B;
  } else if (tb) {
    C.noalias() = A * B.transpose();
  } else {
    C.noalias() = A * B;
  }
  const std::size_t n = static_cast<std::size_t>(C.size());
  const double* c = C.data();
  if (accumulate) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += c[i];
  } else {
    std::copy(c, c + n, dst);
  }
}

// Unrolls conv2d input patches into a [cin * kt * kf, t_out * f_out] matrix
// (gather) and accumulates such a matrix back onto the input layout (scatter).
struct Im2Col {
  int cin, t_in, f_in, kt, kf, st, pt, pf, t_out, f_out;

  template <typename Fn>
  void visit(Fn&& fn) const {
    const std::size_t plane = static_cast<std::size_t>(t_out) * f_out;
    std::size_t row = 0;
    for (int ci = 0; ci < cin; ++ci) {
      for (int dt = 0; dt < kt; ++dt) {
        for (int df = 0; df < kf; ++df, ++row) {
          const std::size_t base = row * plane;
          for (int to = 0; to < t_out; ++to) {
            const int ti = to * st + dt - pt;
            if (ti < 0 || ti >= t_in) continue;
            const std::size_t in_row = (static_cast<std::size_t>(ci) * t_in + ti) * f_in;
            const std::size_t out_row = base + static_cast<std::size_t>(to) * f_out;
            for (int fo = 0; fo < f_out; ++fo) {
              const int fi = fo * st + df - pf;
              if (fi >= 0 && fi < f_in) fn(out_row + fo, in_row + fi);
            }
          }
        }
      }
    }
  }

  std::vector<double> gather(const double* x) const {
    std::vector<double> cols(static_cast<std::size_t>(cin) * kt * kf * t_out * f_out, 0.0);
    visit([&](std::size_t c, std::size_t i) { cols[c] = x[i]; });
    return cols;
  }

  void scatter(const double* cols, double* gx) const {
    visit([&](std::size_t c, std::size_t i) { gx[i] += cols[c]; });
  }
};

}  // namespace

Tensor matmul(const Tensor& a, const Tensor& b) {
  const bool batched = a.rank() == 3;
  if (a.rank() != b.rank() || (a.rank() != 2 && a.rank() != 3) ||
      (batched && a.dim(0) != b.dim(0)) || a.dim(a.rank() - 1) != b.dim(b.rank() - 2)) {
    throw InvalidArgument("matmul: incompatible shapes " + shape_str(a.shape()) + " x " +
                          shape_str(b.shape()));
  }
  const BatchDims d{batched ? a.dim(0) : 1, a.dim(a.rank() - 2), a.dim(a.rank() - 1),
                    b.dim(b.rank() - 1)};
  Shape out_shape = batched ? Shape{d.batch, d.rows, d.cols} : Shape{d.rows, d.cols};
  const std::size_t sa = static_cast<std::size_t>(d.rows) * d.inner;
  const std::size_t sb = static_cast<std::size_t>(d.inner) * d.cols;
  const std::size_t sc = static_cast<std::size_t>(d.rows) * d.cols;
  std::vector<double> out(d.batch * sc);
  for (int s = 0; s < d.batch; ++s) {
    gemm(out.data() + s * sc, false, a.data().data() + s * sa, d.rows, d.inner, false,
         b.data().data() + s * sb, d.inner, d.cols, false);
  }
  return make_result(std::move(out_shape), std::move(out), {a, b}, [=](Node& self) {
    Node& na = *self.parents[0];
    Node& nb = *self.parents[1];
    for (int s = 0; s < d.batch; ++s) {
      const double* g = self.grad.data() + s * sc;
      if (na.requires_grad) {
        gemm(na.ensure_grad().data() + s * sa, true, g, d.rows, d.cols, false,
             nb.data.data() + s * sb, d.inner, d.cols, true);
      }
      if (nb.requires_grad) {
        gemm(nb.ensure_grad().data() + s * sb, true, na.data.data() + s * sa, d.rows, d.inner, true,
             g, d.rows, d.cols, false);
      }
    }
  });
}

Tensor transpose_last(const Tensor& x) {
  if (x.rank() < 2) throw InvalidArgument("transpose_last: rank < 2");
  std::vector<int> order(static_cast<std::size_t>(x.rank()));
  for (int i = 0; i < x.rank(); ++i) order[i] = i;
  std::swap(order[x.rank() - 1], order[x.rank() - 2]);
  return permute(x, order);
}

Tensor softmax_last(const Tensor& x) {
  if (x.rank() < 1 || x.shape().back() < 1) throw InvalidArgument("softmax_last: empty axis");
  const std::size_t cols = static_cast<std::size_t>(x.shape().back());
  const std::size_t rows = x.numel() / cols;
  std::vector<double> out(x.numel());
  auto d = x.data();
  for (std::size_t r = 0; r < rows; ++r) {
    const double* in = d.data() + r * cols;
    double* o = out.data() + r * cols;
    const double mx = *std::max_element(in, in + cols);
    double s = 0.0;
    for (std::size_t c = 0; c < cols; ++c) s += (o[c] = std::exp(in[c] - mx));
    for (std::size_t c = 0; c < cols; ++c) o[c] /= s;
  }
  return make_result(x.shape(), std::move(out), {x}, [rows, cols](Node& self) {
    auto& g = self.parents[0]->ensure_grad();
    for (std::size_t r = 0; r < rows; ++r) {
      const double* y = self.data.data() + r * cols;
      const double* gy = self.grad.data() + r * cols;
      double dot = 0.0;
      for (std::size_t c = 0; c < cols; ++c) dot += gy[c] * y[c];
      for (std::size_t c = 0; c < cols; ++c) g[r * cols + c] += y[c] * (gy[c] - dot);
    }
  });
}

Tensor linear(const Tensor& x, const Tensor& weight, const Tensor& bias) {
  if (x.rank() < 1 || weight.rank() != 2 || x.shape().back() != weight.dim(1) ||
      (bias.defined() && (bias.rank() != 1 || bias.dim(0) != weight.dim(0)))) {
    throw InvalidArgument("linear: incompatible shapes " + shape_str(x.shape()) + " and weight " +
                          shape_str(weight.shape()));
  }
  const int in = weight.dim(1), outf = weight.dim(0);
  const std::size_t rows = x.numel() / static_cast<std::size_t>(in);
  Shape out_shape = x.shape();
  out_shape.back() = outf;
  std::vector<double> out(rows * outf);
  auto X = x.data(), W = weight.data();
  for (std::size_t r = 0; r < rows; ++r) {
    const double* xr = X.data() + r * in;
    for (int o = 0; o < outf; ++o) {
      const double* wr = W.data() + static_cast<std::size_t>(o) * in;
      double acc = bias.defined() ? bias.data()[o] : 0.0;
      for (int i = 0; i < in; ++i) acc += xr[i] * wr[i];
      out[r * outf + o] = acc;
    }
  }
  std::vector<Tensor> parents{x, weight};
  if (bias.defined()) parents.push_back(bias);
  return make_result(std::move(out_shape), std::move(out), parents, [=](Node& self) {
    Node& nx = *self.parents[0];
    Node& nw = *self.parents[1];
    const double* gy = self.grad.data();
    if (nx.requires_grad) {
      auto& gx = nx.ensure_grad();
      for (std::size_t r = 0; r < rows; ++r) {
        for (int o = 0; o < outf; ++o) {
          const double g = gy[r * outf + o];
          const double* wr = nw.data.data() + static_cast<std::size_t>(o) * in;
          double* gxr = gx.data() + r * in;
          for (int i = 0; i < in; ++i) gxr[i] += g * wr[i];
        }
      }
    }
    if (nw.requires_grad) {
      auto& gw = nw.ensure_grad();
      for (std::size_t r = 0; r < rows; ++r) {
        const double* xr = nx.data.data() + r * in;
        for (int o = 0; o < outf; ++o) {
          const double g = gy[r * outf + o];
          double* gwr = gw.data() + static_cast<std::size_t>(o) * in;
          for (int i = 0; i < in; ++i) gwr[i] += g * xr[i];
        }
      }
    }
    if (self.parents.size() > 2 && self.parents[2]->requires_grad) {
      auto& gb = self.parents[2]->ensure_grad();
      for (std::size_t r = 0; r < rows; ++r) {
        for (int o = 0; o < outf; ++o) gb[o] += gy[r * outf + o];
      }
    }
  });
}

Tensor conv2d(const Tensor& x, const Tensor& weight, const Tensor& bias, Conv2dSpec spec) {
  if (x.rank() != 3 || weight.rank() != 4 || weight.dim(1) != x.dim(0) ||
      (bias.defined() && (bias.rank() != 1 || bias.dim(0) != weight.dim(0)))) {
    throw InvalidArgument("conv2d: incompatible shapes x " + shape_str(x.shape()) + " weight " +
                          shape_str(weight.shape()));
  }
  if (spec.stride < 1 || spec.pad_t < 0 || spec.pad_f < 0) {
    throw InvalidArgument("conv2d: invalid stride/padding");
  }
  const int cin = x.dim(0), t_in = x.dim(1), f_in = x.dim(2);
  const int cout = weight.dim(0), kt = weight.dim(2), kf = weight.dim(3);
  const int st = spec.stride, pt = spec.pad_t, pf = spec.pad_f;
  const int t_out = (t_in + 2 * pt - kt) / st + 1;
  const int f_out = (f_in + 2 * pf - kf) / st + 1;
  if (t_in + 2 * pt < kt || f_in + 2 * pf < kf || t_out < 1 || f_out < 1) {
    throw InvalidArgument("conv2d: kernel larger than padded input");
  }
  const Im2Col geom{cin, t_in, f_in, kt, kf, st, pt, pf, t_out, f_out};
  const Eigen::Index taps = static_cast<Eigen::Index>(cin) * kt * kf;
  const Eigen::Index plane = static_cast<Eigen::Index>(t_out) * f_out;

  const bool pointwise = kt == 1 && kf == 1 && st == 1 && pt == 0 && pf == 0;
  std::vector<double> cols;
  if (!pointwise) cols = geom.gather(x.data().data());
  const double* cp = pointwise ? x.data().data() : cols.data();

  std::vector<double> out(static_cast<std::size_t>(cout) * plane);
  gemm(out.data(), false, weight.data().data(), cout, taps, false, cp, taps, plane, false);
  if (bias.defined()) {
    for (int co = 0; co < cout; ++co) {
      double* row = out.data() + co * plane;
      for (Eigen::Index i = 0; i < plane; ++i) row[i] += bias.data()[co];
    }
  }

  std::vector<Tensor> parents{x, weight};
  if (bias.defined()) parents.push_back(bias);
  return make_result({cout, t_out, f_out}, std::move(out), parents, [=](Node& self) {
    Node& nx = *self.parents[0];
    Node& nw = *self.parents[1];
    const double* g = self.grad.data();
    if (nw.requires_grad) {
      std::vector<double> recomputed;
      if (!pointwise) recomputed = geom.gather(nx.data.data());
      const double* c = pointwise ? nx.data.data() : recomputed.data();
      gemm(nw.ensure_grad().data(), true, g, cout, plane, false, c, taps, plane, true);
    }
    if (nx.requires_grad) {
      if (pointwise) {
        gemm(nx.ensure_grad().data(), true, nw.data.data(), cout, taps, true, g, cout, plane, false);
      } else {
        std::vector<double> gcols(static_cast<std::size_t>(taps * plane));
        gemm(gcols.data(), false, nw.data.data(), cout, taps, true, g, cout, plane, false);
        geom.scatter(gcols.data(), nx.ensure_grad().data());
      }
    }
    if (self.parents.size() > 2 && self.parents[2]->requires_grad) {
      double* gb = self.parents[2]->ensure_grad().data();
      for (int co = 0; co < cout; ++co) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < plane; ++i) acc += g[co * plane + i];
        gb[co] += acc;
      }
    }
  });
}

Tensor group_norm(const Tensor& x, int groups, const Tensor& scale, const Tensor& shift,
                  double eps) {
  if (x.rank() < 2 || groups < 1 || x.dim(0) % groups != 0) {
    throw InvalidArgument("group_norm: channels " + std::to_string(x.rank() ? x.dim(0) : 0) +
                          " not divisible into " + std::to_string(groups) + " groups");
  }
  const int channels = x.dim(0);
  if (scale.rank() != 1 || scale.dim(0) != channels || shift.rank() != 1 ||
      shift.dim(0) != channels) {
    throw InvalidArgument("group_norm: affine parameters must be [C]");
  }
  const std::size_t inner = x.numel() / channels;
  const std::size_t per_group = inner * (channels / groups);
  const int cpg = channels / groups;

  auto X = x.data();
  auto gamma = scale.data(), beta = shift.data();
  auto xhat = std::make_shared<std::vector<double>>(x.numel());
  auto inv_std = std::make_shared<std::vector<double>>(static_cast<std::size_t>(groups));
  std::vector<double> out(x.numel());
  for (int g = 0; g < groups; ++g) {
    const std::size_t base = g * per_group;
    double mu = 0.0;
    for (std::size_t i = 0; i < per_group; ++i) mu += X[base + i];
    mu /= static_cast<double>(per_group);
    double var = 0.0;
    for (std::size_t i = 0; i < per_group; ++i) var += (X[base + i] - mu) * (X[base + i] - mu);
    var /= static_cast<double>(per_group);
    const double is = 1.0 / std::sqrt(var + eps);
    (*inv_std)[g] = is;
    for (std::size_t i = 0; i < per_group; ++i) {
      const std::size_t k = base + i;
      const int c = g * cpg + static_cast<int>(i / inner);
      (*xhat)[k] = (X[k] - mu) * is;
      out[k] = (*xhat)[k] * gamma[c] + beta[c];
    }
  }
  return make_result(x.shape(), std::move(out), {x, scale, shift}, [=](Node& self) {
    Node& nx = *self.parents[0];
    Node& ns = *self.parents[1];
    Node& nb = *self.parents[2];
    const auto& gy = self.grad;
    if (ns.requires_grad || nb.requires_grad) {
      auto& gs = ns.ensure_grad();
      auto& gb = nb.ensure_grad();
      for (int c = 0; c < channels; ++c) {
        double a = 0.0, b = 0.0;
        for (std::size_t i = 0; i < inner; ++i) {
          const std::size_t k = c * inner + i;
          a += gy[k] * (*xhat)[k];
          b += gy[k];
        }
        if (ns.requires_grad) gs[c] += a;
        if (nb.requires_grad) gb[c] += b;
      }
    }
    if (!nx.requires_grad) return;
    auto& gx = nx.ensure_grad();
    for (int g = 0; g < groups; ++g) {
      const std::size_t base = g * per_group;
      double m1 = 0.0, m2 = 0.0;
      for (std::size_t i = 0; i < per_group; ++i) {
        const std::size_t k = base + i;
        const double d = gy[k] * ns.data[g * cpg + i / inner];
        m1 += d;
        m2 += d * (*xhat)[k];
      }
      m1 /= static_cast<double>(per_group);
      m2 /= static_cast<double>(per_group);
      for (std::size_t i = 0; i < per_group; ++i) {
        const std::size_t k = base + i;
        const double d = gy[k] * ns.data[g * cpg + i / inner];
        gx[k] += (*inv_std)[g] * (d - m1 - (*xhat)[k] * m2);
      }
    }
  });
}

Tensor gru_cell(const Tensor& x, const Tensor& h, const GruWeights& w) {
  if (x.rank() != 2 || h.rank() != 2 || x.dim(0) != h.dim(0)) {
    throw InvalidArgument("gru_cell: expected x [B, In] and h [B, H]");
  }
  const int batch = x.dim(0), in = x.dim(1), hid = h.dim(1);
  if (w.w_ih.shape() != Shape{3 * hid, in} || w.w_hh.shape() != Shape{3 * hid, hid} ||
      w.b_ih.shape() != Shape{3 * hid} || w.b_hh.shape() != Shape{3 * hid}) {
    throw InvalidArgument("gru_cell: weight shapes do not match input " + std::to_string(in) +
                          " / hidden " + std::to_string(hid));
  }
  const int g3 = 3 * hid;
  auto X = x.data(), H = h.data();
  auto Wi = w.w_ih.data(), Wh = w.w_hh.data(), Bi = w.b_ih.data(), Bh = w.b_hh.data();

  // Saved activations: r, z, n, and the hidden-side candidate pre-activation.
  auto saved = std::make_shared<std::vector<double>>(static_cast<std::size_t>(batch) * 4 * hid);
  std::vector<double> out(static_cast<std::size_t>(batch) * hid);
  std::vector<double> gi(g3), gh(g3);
  for (int b = 0; b < batch; ++b) {
    for (int j = 0; j < g3; ++j) {
      double a = Bi[j], c = Bh[j];
      for (int i = 0; i < in; ++i) a += Wi[static_cast<std::size_t>(j) * in + i] * X[b * in + i];
      for (int i = 0; i < hid; ++i) c += Wh[static_cast<std::size_t>(j) * hid + i] * H[b * hid + i];
      gi[j] = a;
      gh[j] = c;
    }
    double* sv = saved->data() + static_cast<std::size_t>(b) * 4 * hid;
    for (int j = 0; j < hid; ++j) {
      const double r = 1.0 / (1.0 + std::exp(-(gi[j] + gh[j])));
      const double z = 1.0 / (1.0 + std::exp(-(gi[hid + j] + gh[hid + j])));
      const double n = std::tanh(gi[2 * hid + j] + r * gh[2 * hid + j]);
      sv[j] = r;
      sv[hid + j] = z;
      sv[2 * hid + j] = n;
      sv[3 * hid + j] = gh[2 * hid + j];
      out[b * hid + j] = (1.0 - z) * n + z * H[b * hid + j];
    }
  }
  return make_result(
      {batch, hid}, std::move(out), {x, h, w.w_ih, w.w_hh, w.b_ih, w.b_hh},
      [=](Node& self) {
        Node& nx = *self.parents[0];
        Node& nh = *self.parents[1];
        Node& nwi = *self.parents[2];
        Node& nwh = *self.parents[3];
        Node& nbi = *self.parents[4];
        Node& nbh = *self.parents[5];
        std::vector<double> dgi(g3), dgh(g3);
        for (int b = 0; b < batch; ++b) {
          const double* sv = saved->data() + static_cast<std::size_t>(b) * 4 * hid;
          const double* hp = nh.data.data() + static_cast<std::size_t>(b) * hid;
          const double* xb = nx.data.data() + static_cast<std::size_t>(b) * in;
          for (int j = 0; j < hid; ++j) {
            const double gy = self.grad[b * hid + j];
            const double r = sv[j], z = sv[hid + j], n = sv[2 * hid + j], ghn = sv[3 * hid + j];
            const double dn = gy * (1.0 - z) * (1.0 - n * n);
            const double dz = gy * (hp[j] - n) * z * (1.0 - z);
            const double dr = dn * ghn * r * (1.0 - r);
            dgi[j] = dr;
            dgi[hid + j] = dz;
            dgi[2 * hid + j] = dn;
            dgh[j] = dr;
            dgh[hid + j] = dz;
            dgh[2 * hid + j] = dn * r;
            if (nh.requires_grad) nh.ensure_grad()[b * hid + j] += gy * z;
          }
          if (nx.requires_grad) {
            auto& gx = nx.ensure_grad();
            for (int j = 0; j < g3; ++j) {
              for (int i = 0; i < in; ++i) gx[b * in + i] += dgi[j] * nwi.data[static_cast<std::size_t>(j) * in + i];
            }
          }
          if (nh.requires_grad) {
            auto& gh_ = nh.ensure_grad();
            for (int j = 0; j < g3; ++j) {
              for (int i = 0; i < hid; ++i) gh_[b * hid + i] += dgh[j] * nwh.data[static_cast<std::size_t>(j) * hid + i];
            }
          }
          if (nwi.requires_grad) {
            auto& g = nwi.ensure_grad();
            for (int j = 0; j < g3; ++j) {
              for (int i = 0; i < in; ++i) g[static_cast<std::size_t>(j) * in + i] += dgi[j] * xb[i];
            }
          }
          if (nwh.requires_grad) {
            auto& g = nwh.ensure_grad();
            for (int j = 0; j < g3; ++j) {
              for (int i = 0; i < hid; ++i) g[static_cast<std::size_t>(j) * hid + i] += dgh[j] * hp[i];
            }
          }
          if (nbi.requires_grad) {
            auto& g = nbi.ensure_grad();
            for (int j = 0; j < g3; ++j) g[j] += dgi[j];
          }
          if (nbh.requires_grad) {
            auto& g = nbh.ensure_grad();
            for (int j = 0; j < g3; ++j) g[j] += dgh[j];
          }
        }
      });
}

namespace {

struct Tap {
  int out, in;
  double w;
};

// Index of position `i` in a reflect-padded axis of length n.
int reflect(int i, int n) {
  if (i < 0) return -i;
  if (i >= n) return 2 * (n - 1) - i;
  return i;
}

Tensor apply_taps(const Tensor& x, int width_out, std::shared_ptr<const std::vector<Tap>> taps) {
  const int width_in = x.shape().back();
  const std::size_t rows = x.numel() / static_cast<std::size_t>(width_in);
  Shape out_shape = x.shape();
  out_shape.back() = width_out;
  std::vector<double> out(rows * width_out, 0.0);
  auto d = x.data();
  for (std::size_t r = 0; r < rows; ++r) {
    for (const Tap& t : *taps) out[r * width_out + t.out] += t.w * d[r * width_in + t.in];
  }
  return make_result(std::move(out_shape), std::move(out), {x}, [=](Node& self) {
    auto& g = self.parents[0]->ensure_grad();
    for (std::size_t r = 0; r < rows; ++r) {
      for (const Tap& t : *taps) g[r * width_in + t.in] += t.w * self.grad[r * width_out + t.out];
    }
  });
}

}  // namespace

Tensor fir_resample_freq(const Tensor& x, FreqResample direction) {
  if (x.rank() < 1) throw InvalidArgument("fir_resample_freq: scalar input");
  const int f = x.shape().back();
  auto taps = std::make_shared<std::vector<Tap>>();
  constexpr double kernel[3] = {0.25, 0.5, 0.25};
  if (direction == FreqResample::down) {
    if (f < 2 || f % 2 != 0) {
      throw InvalidArgument("fir_resample_freq: down requires an even frequency axis, got " +
                            std::to_string(f));
    }
    for (int o = 0; o < f / 2; ++o) {
      for (int k = -1; k <= 1; ++k) taps->push_back({o, reflect(2 * o + k, f), kernel[k + 1]});
    }
    return apply_taps(x, f / 2, taps);
  }
  if (f < 1) throw InvalidArgument("fir_resample_freq: empty frequency axis");
  // Zero insertion: upsampled position 2i carries x[i], odd positions are 0.
  const int n = 2 * f;
  for (int o = 0; o < n; ++o) {
    for (int k = -1; k <= 1; ++k) {
      const int u = reflect(o + k, n);
      if (u % 2 == 0) taps->push_back({o, u / 2, 2.0 * kernel[k + 1]});
    }
  }
  return apply_taps(x, n, taps);
}

}  // namespace ssr
