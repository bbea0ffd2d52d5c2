#include "cploss/series.hpp"

#include <algorithm>
#include <cmath>

namespace cploss {

namespace detail {
void require_same_shape(const ChannelSeries& a, const ChannelSeries& b, const char* where) {
    if (!a.same_shape(b)) {
        throw ShapeError(std::string(where) + ": shape mismatch, " + std::to_string(a.channels()) + "x" +
                         std::to_string(a.length()) + " vs " + std::to_string(b.channels()) + "x" +
                         std::to_string(b.length()));
    }
}
} // namespace detail

ChannelSeries::ChannelSeries(int channels, int length)
    : channels_(channels), length_(length),
      data_(static_cast<std::size_t>(channels) * static_cast<std::size_t>(length), 0.0) {
    if (channels < 1 || length < 1) {
        throw ShapeError("ChannelSeries: channels and length must be >= 1, got " + std::to_string(channels) +
                         "x" + std::to_string(length));
    }
}

ChannelSeries::ChannelSeries(int channels, int length, std::vector<double> values)
    : channels_(channels), length_(length), data_(std::move(values)) {
    if (channels < 1 || length < 1) {
        throw ShapeError("ChannelSeries: channels and length must be >= 1, got " + std::to_string(channels) +
                         "x" + std::to_string(length));
    }
    if (data_.size() != static_cast<std::size_t>(channels) * static_cast<std::size_t>(length)) {
        throw ShapeError("ChannelSeries: value count " + std::to_string(data_.size()) + " does not match " +
                         std::to_string(channels) + "x" + std::to_string(length));
    }
    if (!all_finite()) {
        throw ShapeError("ChannelSeries: non-finite entry in input data");
    }
}

ChannelSeries ChannelSeries::constant(int channels, int length, double value) {
    ChannelSeries out(channels, length);
    std::fill(out.data_.begin(), out.data_.end(), value);
    return out;
}

bool ChannelSeries::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

ChannelSeries& ChannelSeries::operator+=(const ChannelSeries& rhs) {
    detail::require_same_shape(*this, rhs, "ChannelSeries::operator+=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
}

ChannelSeries& ChannelSeries::operator-=(const ChannelSeries& rhs) {
    detail::require_same_shape(*this, rhs, "ChannelSeries::operator-=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
}

ChannelSeries& ChannelSeries::operator*=(double scale) {
    for (double& v : data_) v *= scale;
    return *this;
}

ChannelSeries operator+(ChannelSeries lhs, const ChannelSeries& rhs) {
    lhs += rhs;
    return lhs;
}

ChannelSeries operator-(ChannelSeries lhs, const ChannelSeries& rhs) {
    lhs -= rhs;
    return lhs;
}

ChannelSeries operator*(double scale, ChannelSeries rhs) {
    rhs *= scale;
    return rhs;
}

double dot(const ChannelSeries& a, const ChannelSeries& b) {
    detail::require_same_shape(a, b, "dot");
    double acc = 0.0;
    const auto& av = a.values();
    const auto& bv = b.values();
    for (std::size_t i = 0; i < av.size(); ++i) acc += av[i] * bv[i];
    return acc;
}

double max_abs_diff(const ChannelSeries& a, const ChannelSeries& b) {
    detail::require_same_shape(a, b, "max_abs_diff");
    double worst = 0.0;
    const auto& av = a.values();
    const auto& bv = b.values();
    for (std::size_t i = 0; i < av.size(); ++i) worst = std::max(worst, std::fabs(av[i] - bv[i]));
    return worst;
}

} // namespace cploss
