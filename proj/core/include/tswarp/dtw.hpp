#pragma once

#include "tswarp/types.hpp"

namespace tswarp {

/**
 * Banded dynamic time warping: the minimum over warping paths restricted
 * to |i - j| <= r of the sum of squared Euclidean point distances along
 * the path. No final square root is taken; reported DTW values are the
 * squared-sum semantics throughout.
 *
 * Returns infinity when no band-feasible path exists (|m - n| > r).
 * O(n * min(m, 2r+1)) time, two-column memory.
 */
[[nodiscard]] double dtw_banded(const TimeSeries& s, const TimeSeries& t, BandRadius r);

/**
 * Banded DTW with early abandoning: the DP runs column by column, and the
 * minimum entry of each band column is a lower bound on the final value.
 * Once that minimum exceeds eps the computation stops with Exceeds(eps);
 * a finished DP whose value is still above eps also reports Exceeds, so
 * Exact(d) always carries d <= eps.
 */
[[nodiscard]] ThresholdedDistance dtw_early_abandon(const TimeSeries& s, const TimeSeries& t,
                                                    BandRadius r, double eps);

}  // namespace tswarp
