#include "tswarp/dtw.hpp"

#include <algorithm>

namespace tswarp {

namespace {

// Suffix-order banded DP. Cell (i, j) holds the best path value from
// (i, j) to (m-1, n-1); columns are processed from the last to the first
// so the additions associate exactly as in the recursive definition.
// When Abandon is set, the per-column band minimum is checked against eps.
template <bool Abandon>
double dtw_suffix(const TimeSeries& s, const TimeSeries& t, std::size_t r, double eps,
                  bool* abandoned) {
    const std::size_t m = s.length();
    const std::size_t n = t.length();
    const std::size_t k = s.dim();

    // band rows of column j: [lo(j), hi(j)]
    const auto lo_of = [&](std::size_t j) { return (j >= r) ? j - r : 0; };
    const auto hi_of = [&](std::size_t j) { return std::min(m - 1, j + r); };

    const std::size_t width = (r >= m) ? m : std::min(m, 2 * r + 2);
    std::vector<double> prev(width, kInf);
    std::vector<double> cur(width, kInf);
    std::size_t prev_lo = 0, prev_hi = 0;
    bool have_prev = false;

    for (std::size_t jj = n; jj-- > 0;) {
        const std::size_t lo = lo_of(jj);
        const std::size_t hi = hi_of(jj);
        if (lo > hi) return kInf;  // band empty: j - r > m - 1, no path can exist
        double colmin = kInf;
        for (std::size_t ii = hi + 1; ii-- > lo;) {
            const double c = detail::sq_dist(s.point(ii).data(), t.point(jj).data(), k);
            double v;
            if (ii == m - 1 && jj == n - 1) {
                v = c;
            } else {
                double best = kInf;
                if (have_prev) {
                    if (ii + 1 >= prev_lo && ii + 1 <= prev_hi)
                        best = std::min(best, prev[ii + 1 - prev_lo]);
                    if (ii >= prev_lo && ii <= prev_hi) best = std::min(best, prev[ii - prev_lo]);
                }
                if (ii + 1 <= hi) best = std::min(best, cur[ii + 1 - lo]);
                v = c + best;
            }
            cur[ii - lo] = v;
            colmin = std::min(colmin, v);
        }
        if constexpr (Abandon) {
            if (colmin > eps) {
                *abandoned = true;
                return kInf;
            }
        }
        std::swap(prev, cur);
        prev_lo = lo;
        prev_hi = hi;
        have_prev = true;
    }
    return prev[0];  // cell (0, 0); lo(0) == 0 always
}

void check_dims(const TimeSeries& s, const TimeSeries& t, const char* op) {
    if (s.dim() != t.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimensionality mismatch (" +
                                    std::to_string(s.dim()) + " vs " + std::to_string(t.dim()) +
                                    ")");
    }
}

}  // namespace

double dtw_banded(const TimeSeries& s, const TimeSeries& t, BandRadius r) {
    check_dims(s, t, "dtw_banded");
    return dtw_suffix<false>(s, t, r.value, kInf, nullptr);
}

ThresholdedDistance dtw_early_abandon(const TimeSeries& s, const TimeSeries& t, BandRadius r,
                                      double eps) {
    check_dims(s, t, "dtw_early_abandon");
    if (eps < 0) throw std::invalid_argument("dtw_early_abandon: eps must be nonnegative");
    bool abandoned = false;
    const double d = dtw_suffix<true>(s, t, r.value, eps, &abandoned);
    if (abandoned || d > eps) return ThresholdedDistance::exceeds(eps);
    return ThresholdedDistance::exact(d);
}

}  // namespace tswarp
