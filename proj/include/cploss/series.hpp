#ifndef CPLOSS_SERIES_HPP
#define CPLOSS_SERIES_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cploss {

/// Shape or size disagreement between operands.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Invalid configuration value (even kernel size, nonpositive counts, ...).
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Problem with an input dataset or file.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// API misuse (e.g. backward pass without saved forward intermediates).
struct UsageError : std::logic_error {
    using std::logic_error::logic_error;
};

/**
 * A C-channel, T-step real-valued sequence, stored channel-major so each
 * channel's samples are contiguous in time. This is the one signal container
 * used everywhere: raw data, lookback windows, targets, predictions and all
 * pyramid components.
 */
class ChannelSeries {
public:
    ChannelSeries() = default;

    /// Zero-filled series of the given shape.
    ChannelSeries(int channels, int length);

    /// Takes ownership of `values` (channel-major, size channels*length).
    /// Rejects NaN/Inf entries.
    ChannelSeries(int channels, int length, std::vector<double> values);

    static ChannelSeries constant(int channels, int length, double value);

    int channels() const { return channels_; }
    int length() const { return length_; }
    bool empty() const { return data_.empty(); }
    std::size_t size() const { return data_.size(); }

    double at(int c, int t) const { return data_[static_cast<std::size_t>(c) * length_ + t]; }
    double& at(int c, int t) { return data_[static_cast<std::size_t>(c) * length_ + t]; }

    std::span<const double> channel(int c) const {
        return {data_.data() + static_cast<std::size_t>(c) * length_, static_cast<std::size_t>(length_)};
    }
    std::span<double> channel(int c) {
        return {data_.data() + static_cast<std::size_t>(c) * length_, static_cast<std::size_t>(length_)};
    }

    const std::vector<double>& values() const { return data_; }
    std::vector<double>& values() { return data_; }

    bool same_shape(const ChannelSeries& other) const {
        return channels_ == other.channels_ && length_ == other.length_;
    }

    ChannelSeries& operator+=(const ChannelSeries& rhs);
    ChannelSeries& operator-=(const ChannelSeries& rhs);
    ChannelSeries& operator*=(double scale);

    bool all_finite() const;

private:
    int channels_ = 0;
    int length_ = 0;
    std::vector<double> data_;
};

ChannelSeries operator+(ChannelSeries lhs, const ChannelSeries& rhs);
ChannelSeries operator-(ChannelSeries lhs, const ChannelSeries& rhs);
ChannelSeries operator*(double scale, ChannelSeries rhs);

/// Elementwise inner product over all C*T entries.
double dot(const ChannelSeries& a, const ChannelSeries& b);

/// Largest absolute entry difference; series must share a shape.
double max_abs_diff(const ChannelSeries& a, const ChannelSeries& b);

namespace detail {
void require_same_shape(const ChannelSeries& a, const ChannelSeries& b, const char* where);
}

} // namespace cploss

#endif // CPLOSS_SERIES_HPP
