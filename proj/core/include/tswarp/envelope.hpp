#pragma once

#include "tswarp/types.hpp"

namespace tswarp {

/**
 * Per-dimension running min/max of a series under a band radius r:
 * lower[i][j] = min and upper[i][j] = max of dimension j over the index
 * window [i-r, i+r] clamped to the series. Row i of lower/upper is the
 * lower-left / upper-right corner of the bounding box B_i.
 */
class Envelope {
public:
    Envelope(std::vector<double> lower, std::vector<double> upper, std::size_t dim, BandRadius r);

    [[nodiscard]] std::size_t length() const noexcept { return lower_.size() / dim_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] BandRadius radius() const noexcept { return radius_; }

    [[nodiscard]] double lower(std::size_t i, std::size_t j) const { return lower_[i * dim_ + j]; }
    [[nodiscard]] double upper(std::size_t i, std::size_t j) const { return upper_[i * dim_ + j]; }
    [[nodiscard]] std::span<const double> lower_flat() const noexcept { return lower_; }
    [[nodiscard]] std::span<const double> upper_flat() const noexcept { return upper_; }

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
    std::size_t dim_ = 0;
    BandRadius radius_;
};

/**
 * Builds the envelope of t under band radius r in O(n * k) total using
 * the monotonic-deque streaming algorithm: per dimension, every index is
 * pushed and popped at most once.
 */
[[nodiscard]] Envelope envelope(const TimeSeries& t, BandRadius r);

}  // namespace tswarp
