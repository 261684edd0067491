#pragma once

#include <optional>

#include "tswarp/dogkeeper.hpp"
#include "tswarp/types.hpp"

namespace tswarp {

/// Instrumentation of one query scan. Conservation: for knn_dtw,
/// lb_pruned + early_abandoned + full_dp == dataset size; for the DK
/// drivers, early_abandoned + full_dp == dataset size.
struct SearchCounters {
    std::size_t lb_computed = 0;
    std::size_t lb_pruned = 0;
    std::size_t full_dp = 0;
    std::size_t early_abandoned = 0;
    std::size_t gdk_calls = 0;
};

struct Neighbor {
    std::size_t index = 0;
    double distance = 0.0;
};

/// Neighbors sorted ascending by (distance, index); wall_time is the only
/// field that may differ between identical runs.
struct SearchReport {
    std::vector<Neighbor> neighbors;
    SearchCounters counters;
    double wall_time_seconds = 0.0;
};

/**
 * k-nearest-neighbor scan under banded DTW. The envelope is built once
 * over the query and each candidate is first tested with lb_box; candidates
 * whose bound reaches the current k-th best distance are pruned, the rest
 * run dtw_early_abandon against it. The neighbor set equals a brute-force
 * dtw_banded scan under the (distance, index) tie rule.
 *
 * Candidates are processed in fixed blocks with the threshold frozen per
 * block; inside a block they may be evaluated by `threads` workers. The
 * block schedule makes every field of the report (wall time aside)
 * independent of the thread count.
 */
[[nodiscard]] SearchReport knn_dtw(const TimeSeries& query, const Dataset& data, std::size_t k,
                                   BandRadius r, int threads = 1);

/**
 * k-nearest-neighbor scan under the dog-keeper distance, two phases:
 * first every candidate is bounded from above with the greedy walk and
 * the k lowest upper bounds seed the threshold, then every candidate runs
 * the sparse DP against the running k-th best, replacing seeds with exact
 * distances. Equals a brute-force dk_full scan under the tie rule.
 */
[[nodiscard]] SearchReport knn_dk(const TimeSeries& query, const Dataset& data, std::size_t k,
                                  int threads = 1);

/// All candidates with dk_full(query, candidate) <= eps, each with its
/// exact distance, via the sparse DP.
[[nodiscard]] SearchReport epsnn_dk(const TimeSeries& query, const Dataset& data, double eps,
                                    int threads = 1);

/**
 * Best dog-keeper subsequence match of query inside haystack with
 * distance <= eps: the greedy subsequence walk seeds the threshold, the
 * sparse DP in subsequence mode finds the exact optimum under it.
 * Returns nullopt when no match beats eps.
 */
[[nodiscard]] std::optional<SubMatch> sub_search_dk(const TimeSeries& query,
                                                    const TimeSeries& haystack, double eps);

/// k best subsequence matches across a dataset, one per candidate series,
/// ranked by match distance under the (distance, index) tie rule.
[[nodiscard]] SearchReport knn_dk_sub(const TimeSeries& query, const Dataset& data, std::size_t k,
                                      int threads = 1);

}  // namespace tswarp
