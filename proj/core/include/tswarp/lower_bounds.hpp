#pragma once

#include "tswarp/envelope.hpp"
#include "tswarp/types.hpp"

namespace tswarp {

/// Distance from x to the interval [l, u]: l-x below, x-u above, 0 inside.
[[nodiscard]] double dist_to_interval(double x, double l, double u);

/**
 * Classic 1-dimensional envelope lower bound: sum over i of the squared
 * interval distance from s_i to [lower_i, upper_i]. Requires a
 * 1-dimensional series; the multi-dimensional extension is lb_box.
 */
[[nodiscard]] double lb_keogh(const TimeSeries& s, const Envelope& env);

/**
 * Bounding-box lower bound for multi-dimensional banded DTW: the sum over
 * all points of the squared distance from s_i to the axis-aligned box
 * B_i, equivalently the sum of the per-dimension envelope bounds. For
 * k = 1 this is lb_keogh, computed by the same code path.
 */
[[nodiscard]] double lb_box(const TimeSeries& s, const Envelope& env);

/**
 * Windowed-minimum lower bound: sum over i of the minimum squared point
 * distance from s_i to any t_{i+l}, |l| <= r (window clamped at the
 * boundaries). Sits between lb_box and banded DTW:
 * lb_box <= lb_sigma_min <= dtw_banded. O(n * r * k).
 */
[[nodiscard]] double lb_sigma_min(const TimeSeries& s, const TimeSeries& t, BandRadius r);

/**
 * Per-dimension z-normalization: each dimension shifted and scaled to
 * mean 0, standard deviation 1 (population convention). Zero-variance
 * dimensions are shifted to 0 and left unscaled.
 */
[[nodiscard]] TimeSeries znormalize(const TimeSeries& s);

}  // namespace tswarp
