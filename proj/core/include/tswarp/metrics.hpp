#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "tswarp/synth.hpp"
#include "tswarp/types.hpp"

namespace tswarp {

/**
 * Tightness of the box lower bound against banded DTW on one pair:
 * lb_box / dtw_banded in [0, 1], with 0/0 defined as 1 (identical series
 * are perfectly bounded). Throws when the band is infeasible, so callers
 * can exclude the pair from aggregation.
 */
[[nodiscard]] double tightness(const TimeSeries& s, const TimeSeries& t, BandRadius r);

struct GridCell {
    std::size_t dim = 0;
    std::size_t len = 0;
    std::size_t band = 0;
    std::size_t samples = 0;
    double mean_tightness = 0.0;   // mean of per-pair ratios (what the heat maps plot)
    double stderr_ = 0.0;          // standard error of that mean
    double ratio_of_means = 0.0;   // E[lb_box] / E[dtw], the limit statement's quantity
};

/// Completed (dim x len) measurement grid; cells are stored dim-major.
struct GridResult {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> lens;
    std::vector<GridCell> cells;

    [[nodiscard]] const GridCell& cell(std::size_t dim_idx, std::size_t len_idx) const {
        return cells[dim_idx * lens.size() + len_idx];
    }
};

/**
 * Mean tightness per (dim, length) cell over `pairs_per_cell` random
 * pairs drawn from the generator template (dim/length overridden per
 * cell), with band r = round(r_ratio * length). Each cell owns a random
 * stream derived from (seed, dim, length), so results are independent of
 * evaluation order.
 */
[[nodiscard]] GridResult tightness_grid(const GenParams& tmpl,
                                        const std::vector<std::size_t>& dims,
                                        const std::vector<std::size_t>& lens,
                                        std::size_t pairs_per_cell, double r_ratio,
                                        std::uint64_t seed);

/// Fraction of candidate DTW computations skipped by the lb_box test
/// across 1-NN scans of every query, in [0, 1].
[[nodiscard]] double pruning_power(const Dataset& queries, const Dataset& data, BandRadius r);

enum class MetricKind { Dtw, Dk };

/// Leave-one-out 1-NN classification accuracy; ties go to the lowest
/// index. The band radius applies to the Dtw metric only.
[[nodiscard]] double loo_accuracy(const Dataset& data, MetricKind metric, BandRadius r = {});

/**
 * Wall-time ratio of the DTW+lb_box 1-NN scan over the dog-keeper 1-NN
 * scan on the same workload (all queries against data). Both sides are
 * warmed up once and timed `repetitions` times on a monotonic clock; the
 * medians are compared. Values above 1 mean the dog-keeper side is
 * faster.
 */
[[nodiscard]] double speedup(const Dataset& queries, const Dataset& data, BandRadius r,
                             int repetitions = 3, int threads = 1);

/// Monte Carlo estimates for the two aggregation orders of i.i.d.
/// squared-normal variables D over an r x k grid.
struct LemmaEstimates {
    double sum_of_mins = 0.0;  // E[sum_j min_l D_{l,j}]
    double min_of_sums = 0.0;  // E[min_l sum_j D_{l,j}]
    double se_sum_of_mins = 0.0;
    double se_min_of_sums = 0.0;

    [[nodiscard]] double ratio() const { return sum_of_mins / min_of_sums; }
};

/**
 * Samples the two expectations with common draws per sample (sample s of
 * any call with the same seed uses the same underlying variables, drawn
 * window-major, so estimates are prefix-consistent across window counts).
 * For r = 1 the two estimates coincide exactly.
 */
[[nodiscard]] LemmaEstimates lemma_mins_ratio(std::size_t r, std::size_t k, std::size_t samples,
                                              std::uint64_t seed);

/// One row of the benchmark CSV: kind,k,n,r,samples,value,stderr.
struct CsvRow {
    std::string kind;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t samples = 0;
    double value = 0.0;
    double stderr_ = 0.0;
};

/// Writes the fixed-header CSV; a nonempty `command` is recorded first as
/// a `# cmd: ...` comment so the run can be reproduced from the file.
void write_csv(std::ostream& out, const std::vector<CsvRow>& rows,
               std::string_view command = {});

}  // namespace tswarp
