#pragma once

#include <optional>

#include "tswarp/types.hpp"

namespace tswarp {

/// A subsequence match: its distance and the 0-based index of the
/// super-sequence point the match ends at (inclusive).
struct SubMatch {
    double distance = kInf;
    std::size_t end_index = 0;
};

/// One column of the sparse dog-keeper DP: the strictly increasing row
/// indices that hold a value <= the active threshold, and those values.
struct SparseColumn {
    std::vector<std::size_t> indices;
    std::vector<double> values;

    void clear() {
        indices.clear();
        values.clear();
    }
};

/**
 * Dog-keeper (discrete Frechet) distance: the minimum over warping paths
 * of the maximum Euclidean point distance along the path. Unlike DTW the
 * point distances are not squared. Full O(m * n) DP, two-row memory.
 */
[[nodiscard]] double dk_full(const TimeSeries& s, const TimeSeries& t);

/**
 * Greedy dog-keeper upper bound: walks a single path from (0, 0), always
 * stepping to the cheapest of down, diagonal, right (out-of-range moves
 * cost infinity, which forces the tail once either series is exhausted),
 * and returns the maximum distance seen. Always >= dk_full when run to
 * completion; once the running maximum exceeds eps it is returned as-is.
 * O(m + n).
 */
[[nodiscard]] double gdk(const TimeSeries& s, const TimeSeries& t, double eps = kInf);

/**
 * Greedy dog-keeper for subsequence search: starts at the best-matching
 * super-sequence point for s_0, walks greedily, and stops as soon as the
 * last query point is aligned. The result upper-bounds the best
 * subsequence match starting at that point.
 */
[[nodiscard]] SubMatch gdk_sub(const TimeSeries& s, const TimeSeries& t, double eps = kInf);

/**
 * Sparse threshold-pruned dog-keeper DP, whole matching. Processes the
 * warping matrix column by column, visiting only cells whose point
 * distance and accumulated value both stay <= eps; the active cell set
 * is kept as sorted index lists, so each column is a single merge sweep.
 * Returns Exact(d) with d = dk_full(s, t) <= eps when a path survives,
 * Exceeds(eps) otherwise.
 */
[[nodiscard]] ThresholdedDistance sparse_dk(const TimeSeries& s, const TimeSeries& t, double eps);

/**
 * Sparse dog-keeper in subsequence mode: every super-sequence position
 * may start a match (row 0 gets a virtual 0-predecessor in every column)
 * and every position may end one (the last-row value of each column is
 * folded into the running best). Returns the best match with
 * distance <= eps, or nullopt when none survives the threshold.
 */
[[nodiscard]] std::optional<SubMatch> sparse_dk_sub(const TimeSeries& s, const TimeSeries& t,
                                                    double eps);

/// Test utility: dk_full(a, c) <= dk_full(a, b) + dk_full(b, c) + 1e-9.
[[nodiscard]] bool dk_triangle_check(const TimeSeries& a, const TimeSeries& b,
                                     const TimeSeries& c);

}  // namespace tswarp
