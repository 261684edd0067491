#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tswarp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A dataset file that is not even JSON, or JSON of the wrong shape.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a domain invariant (ragged dims, empty dataset, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sakoe-Chiba band radius: warping paths are restricted to |i - j| <= value.
struct BandRadius {
    std::size_t value = 0;
};

/**
 * An ordered sequence of k-dimensional points, immutable after construction.
 * Points are stored row-major (point index major, dimension minor).
 * Construction validates the invariants: length >= 1, dim >= 1, all
 * components finite.
 */
class TimeSeries {
public:
    TimeSeries(std::vector<double> values, std::size_t dim,
               std::optional<std::string> label = std::nullopt);

    [[nodiscard]] std::size_t length() const noexcept { return values_.size() / dim_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    [[nodiscard]] std::span<const double> point(std::size_t i) const {
        return {values_.data() + i * dim_, dim_};
    }
    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return values_[i * dim_ + j]; }
    [[nodiscard]] std::span<const double> flat() const noexcept { return values_; }

    [[nodiscard]] const std::optional<std::string>& label() const noexcept { return label_; }

    [[nodiscard]] TimeSeries with_label(std::optional<std::string> label) const {
        return TimeSeries(values_, dim_, std::move(label));
    }

    /// Contiguous sub-slice [first, last], inclusive, keeping the label.
    [[nodiscard]] TimeSeries slice(std::size_t first, std::size_t last) const;

    friend bool operator==(const TimeSeries& a, const TimeSeries& b) {
        return a.dim_ == b.dim_ && a.values_ == b.values_ && a.label_ == b.label_;
    }

private:
    std::vector<double> values_;
    std::size_t dim_ = 0;
    std::optional<std::string> label_;
};

/**
 * A labeled (or uniformly unlabeled) collection of series sharing one
 * dimensionality, plus provenance metadata (generator name, parameters,
 * seed, all as strings). Construction validates: nonempty, matching dims,
 * labels present on all members or on none.
 */
class Dataset {
public:
    Dataset(std::vector<TimeSeries> series, std::map<std::string, std::string> meta = {});

    [[nodiscard]] const std::vector<TimeSeries>& series() const noexcept { return series_; }
    [[nodiscard]] std::size_t size() const noexcept { return series_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const std::map<std::string, std::string>& meta() const noexcept { return meta_; }
    [[nodiscard]] const TimeSeries& operator[](std::size_t i) const { return series_[i]; }
    [[nodiscard]] bool labeled() const noexcept { return series_.front().label().has_value(); }

    friend bool operator==(const Dataset& a, const Dataset& b) {
        return a.dim_ == b.dim_ && a.series_ == b.series_ && a.meta_ == b.meta_;
    }

private:
    std::vector<TimeSeries> series_;
    std::size_t dim_ = 0;
    std::map<std::string, std::string> meta_;
};

/**
 * Result of a threshold-pruned distance computation: either the exact
 * distance (guaranteed <= the threshold it was computed under), or the
 * signal that the distance exceeds the threshold.
 */
struct ThresholdedDistance {
    enum class Kind { Exact, Exceeds };

    Kind kind = Kind::Exceeds;
    double value = kInf;  // the exact distance, or the threshold that was exceeded

    [[nodiscard]] static ThresholdedDistance exact(double d) { return {Kind::Exact, d}; }
    [[nodiscard]] static ThresholdedDistance exceeds(double eps) { return {Kind::Exceeds, eps}; }
    [[nodiscard]] bool is_exact() const noexcept { return kind == Kind::Exact; }
};

namespace detail {

/// Squared Euclidean distance, no checks. The hot-loop primitive.
inline double sq_dist(const double* a, const double* b, std::size_t k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const double d = a[j] - b[j];
        acc += d * d;
    }
    return acc;
}

/// Euclidean distance, no checks.
inline double dist(const double* a, const double* b, std::size_t k) {
    return std::sqrt(sq_dist(a, b, k));
}

}  // namespace detail

/// Euclidean distance between two points of equal dimensionality.
[[nodiscard]] double point_dist(std::span<const double> a, std::span<const double> b);

}  // namespace tswarp
