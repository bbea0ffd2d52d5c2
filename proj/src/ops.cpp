#include "cploss/ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cploss {

namespace {

void check_kernels(const ChannelSeries& x, std::span<const double> kernels, int k, const char* where) {
    if (k < 1 || k % 2 == 0) {
        throw ConfigError(std::string(where) + ": kernel length must be odd and >= 1, got " + std::to_string(k));
    }
    if (kernels.size() != static_cast<std::size_t>(x.channels()) * static_cast<std::size_t>(k)) {
        throw ShapeError(std::string(where) + ": expected " + std::to_string(x.channels()) + " kernels of length " +
                         std::to_string(k) + ", got " + std::to_string(kernels.size()) + " coefficients");
    }
}

inline int clamp_index(int t, int hi) { return t < 0 ? 0 : (t > hi ? hi : t); }

} // namespace

ChannelSeries conv1d_same(const ChannelSeries& x, std::span<const double> kernels, int k) {
    check_kernels(x, kernels, k, "conv1d_same");
    const int C = x.channels();
    const int T = x.length();
    const int r = k / 2;
    ChannelSeries out(C, T);
    for (int c = 0; c < C; ++c) {
        const auto xin = x.channel(c);
        auto y = out.channel(c);
        const double* w = kernels.data() + static_cast<std::size_t>(c) * k;
        for (int t = 0; t < T; ++t) {
            double acc = 0.0;
            for (int i = 0; i < k; ++i) {
                acc += w[i] * xin[clamp_index(t - r + i, T - 1)];
            }
            y[t] = acc;
        }
    }
    return out;
}

ConvGrads conv1d_same_adjoint(const ChannelSeries& grad_out, const ChannelSeries& x,
                              std::span<const double> kernels, int k) {
    check_kernels(x, kernels, k, "conv1d_same_adjoint");
    detail::require_same_shape(grad_out, x, "conv1d_same_adjoint");
    const int C = x.channels();
    const int T = x.length();
    const int r = k / 2;
    ConvGrads grads;
    grads.grad_x = ChannelSeries(C, T);
    grads.grad_kernels.assign(static_cast<std::size_t>(C) * k, 0.0);
    for (int c = 0; c < C; ++c) {
        const auto xin = x.channel(c);
        const auto g = grad_out.channel(c);
        auto gx = grads.grad_x.channel(c);
        const double* w = kernels.data() + static_cast<std::size_t>(c) * k;
        double* gw = grads.grad_kernels.data() + static_cast<std::size_t>(c) * k;
        for (int t = 0; t < T; ++t) {
            const double gt = g[t];
            for (int i = 0; i < k; ++i) {
                const int src = clamp_index(t - r + i, T - 1);
                gx[src] += w[i] * gt;
                gw[i] += xin[src] * gt;
            }
        }
    }
    return grads;
}

ChannelSeries downsample2(const ChannelSeries& x) {
    const int T = x.length();
    if (T < 2) {
        throw ShapeError("downsample2: need length >= 2, got " + std::to_string(T));
    }
    const int C = x.channels();
    const int To = (T + 1) / 2;
    ChannelSeries out(C, To);
    for (int c = 0; c < C; ++c) {
        const auto xin = x.channel(c);
        auto y = out.channel(c);
        for (int j = 0; j < To; ++j) {
            const int a = 2 * j;
            const int b = std::min(2 * j + 1, T - 1);
            y[j] = 0.5 * (xin[a] + xin[b]);
        }
    }
    return out;
}

ChannelSeries downsample2_adjoint(const ChannelSeries& grad_out, int input_length) {
    const int To = grad_out.length();
    if ((input_length + 1) / 2 != To) {
        throw ShapeError("downsample2_adjoint: gradient length " + std::to_string(To) +
                         " does not match input length " + std::to_string(input_length));
    }
    const int C = grad_out.channels();
    ChannelSeries gx(C, input_length);
    for (int c = 0; c < C; ++c) {
        const auto g = grad_out.channel(c);
        auto out = gx.channel(c);
        for (int j = 0; j < To; ++j) {
            const int a = 2 * j;
            const int b = std::min(2 * j + 1, input_length - 1);
            out[a] += 0.5 * g[j];
            out[b] += 0.5 * g[j]; // a == b on a self-paired odd tail, full gradient
        }
    }
    return gx;
}

ChannelSeries upsample2(const ChannelSeries& x, int target_len) {
    const int T = x.length();
    if (target_len != 2 * T && target_len != 2 * T - 1) {
        throw ShapeError("upsample2: target length " + std::to_string(target_len) + " invalid for input length " +
                         std::to_string(T) + " (expected " + std::to_string(2 * T - 1) + " or " +
                         std::to_string(2 * T) + ")");
    }
    const int C = x.channels();
    ChannelSeries out(C, target_len);
    for (int c = 0; c < C; ++c) {
        const auto xin = x.channel(c);
        auto y = out.channel(c);
        for (int t = 0; t < target_len; ++t) y[t] = xin[t / 2];
    }
    return out;
}

ChannelSeries upsample2_adjoint(const ChannelSeries& grad_out) {
    const int T = grad_out.length();
    const int Ts = (T + 1) / 2;
    const int C = grad_out.channels();
    ChannelSeries gx(C, Ts);
    for (int c = 0; c < C; ++c) {
        const auto g = grad_out.channel(c);
        auto out = gx.channel(c);
        for (int t = 0; t < T; ++t) out[t / 2] += g[t];
    }
    return gx;
}

double mae(const ChannelSeries& a, const ChannelSeries& b) {
    detail::require_same_shape(a, b, "mae");
    const auto& av = a.values();
    const auto& bv = b.values();
    double acc = 0.0;
    for (std::size_t i = 0; i < av.size(); ++i) acc += std::fabs(av[i] - bv[i]);
    return acc / static_cast<double>(av.size());
}

ChannelSeries mae_grad(const ChannelSeries& a, const ChannelSeries& b) {
    detail::require_same_shape(a, b, "mae_grad");
    const auto& av = a.values();
    const auto& bv = b.values();
    ChannelSeries g(a.channels(), a.length());
    const double scale = 1.0 / static_cast<double>(av.size());
    auto& gv = g.values();
    for (std::size_t i = 0; i < av.size(); ++i) {
        const double d = av[i] - bv[i];
        gv[i] = d > 0 ? scale : (d < 0 ? -scale : 0.0);
    }
    return g;
}

} // namespace cploss
