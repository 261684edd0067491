#include "tswarp/types.hpp"

#include <cmath>

namespace tswarp {

TimeSeries::TimeSeries(std::vector<double> values, std::size_t dim,
                       std::optional<std::string> label)
    : values_(std::move(values)), dim_(dim), label_(std::move(label)) {
    if (dim_ == 0) throw ValidationError("time series dimensionality must be >= 1");
    if (values_.empty() || values_.size() % dim_ != 0) {
        throw ValidationError("time series values must hold n >= 1 complete " +
                              std::to_string(dim_) + "-dimensional points, got " +
                              std::to_string(values_.size()) + " components");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw ValidationError("non-finite component at point " + std::to_string(i / dim_) +
                                  ", dimension " + std::to_string(i % dim_));
        }
    }
}

TimeSeries TimeSeries::slice(std::size_t first, std::size_t last) const {
    if (first > last || last >= length()) throw std::invalid_argument("invalid slice bounds");
    std::vector<double> vals(values_.begin() + static_cast<std::ptrdiff_t>(first * dim_),
                             values_.begin() + static_cast<std::ptrdiff_t>((last + 1) * dim_));
    return TimeSeries(std::move(vals), dim_, label_);
}

Dataset::Dataset(std::vector<TimeSeries> series, std::map<std::string, std::string> meta)
    : series_(std::move(series)), meta_(std::move(meta)) {
    if (series_.empty()) throw ValidationError("dataset must contain at least one series");
    dim_ = series_.front().dim();
    const bool labeled = series_.front().label().has_value();
    for (std::size_t i = 0; i < series_.size(); ++i) {
        if (series_[i].dim() != dim_) {
            throw ValidationError("series " + std::to_string(i) + " has dimensionality " +
                                  std::to_string(series_[i].dim()) + ", dataset has " +
                                  std::to_string(dim_));
        }
        if (series_[i].label().has_value() != labeled) {
            throw ValidationError("labels must be present on every series or on none (series " +
                                  std::to_string(i) + ")");
        }
    }
}

double point_dist(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("point_dist: dimensionality mismatch (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                    ")");
    }
    return detail::dist(a.data(), b.data(), a.size());
}

}  // namespace tswarp
