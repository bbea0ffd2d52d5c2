#ifndef CPLOSS_OPS_HPP
#define CPLOSS_OPS_HPP

#include <span>
#include <utility>
#include <vector>

#include "cploss/series.hpp"

namespace cploss {

/**
 * Deterministic numeric primitives on channel series. Every forward op here
 * is linear in its input and ships with an exact adjoint, so gradients of
 * anything composed from them are exact as well (up to rounding).
 *
 * Kernels are passed flat, channel-major: kernels[c*k .. c*k+k) is channel
 * c's kernel. k must be odd.
 */

/// Per-channel same-length correlation with replicate boundary padding.
ChannelSeries conv1d_same(const ChannelSeries& x, std::span<const double> kernels, int k);

struct ConvGrads {
    ChannelSeries grad_x;
    std::vector<double> grad_kernels; // flat, channel-major, size C*k
};

/// Exact adjoint of conv1d_same, including the replicate-padding terms.
ConvGrads conv1d_same_adjoint(const ChannelSeries& grad_out, const ChannelSeries& x,
                              std::span<const double> kernels, int k);

/// Length ceil(T/2); each output is the mean of an adjacent input pair.
/// When T is odd the trailing sample is paired with itself.
ChannelSeries downsample2(const ChannelSeries& x);

/// Adjoint of downsample2 for an input of length `input_length`.
ChannelSeries downsample2_adjoint(const ChannelSeries& grad_out, int input_length);

/// Zero-order hold: repeat each sample twice, truncate to target_len.
/// target_len must be 2*T or 2*T-1 for input length T.
ChannelSeries upsample2(const ChannelSeries& x, int target_len);

/// Adjoint of upsample2: sums replicated positions back onto their source.
ChannelSeries upsample2_adjoint(const ChannelSeries& grad_out);

/// Mean absolute error over all C*T entries.
double mae(const ChannelSeries& a, const ChannelSeries& b);

/// d mae / d a, with sign(0) taken as 0.
ChannelSeries mae_grad(const ChannelSeries& a, const ChannelSeries& b);

} // namespace cploss

#endif // CPLOSS_OPS_HPP
