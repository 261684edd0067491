#include "tswarp/dogkeeper.hpp"

#include <algorithm>

namespace tswarp {

namespace {

void check_dims(const TimeSeries& s, const TimeSeries& t, const char* op) {
    if (s.dim() != t.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimensionality mismatch (" +
                                    std::to_string(s.dim()) + " vs " + std::to_string(t.dim()) +
                                    ")");
    }
}

}  // namespace

double dk_full(const TimeSeries& s, const TimeSeries& t) {
    check_dims(s, t, "dk_full");
    const std::size_t m = s.length();
    const std::size_t n = t.length();
    const std::size_t k = s.dim();

    std::vector<double> prev(n);
    std::vector<double> cur(n);

    // row 0: the path can only come from the left
    cur[0] = detail::dist(s.point(0).data(), t.point(0).data(), k);
    for (std::size_t j = 1; j < n; ++j) {
        cur[j] = std::max(detail::dist(s.point(0).data(), t.point(j).data(), k), cur[j - 1]);
    }
    for (std::size_t i = 1; i < m; ++i) {
        std::swap(prev, cur);
        const double* si = s.point(i).data();
        cur[0] = std::max(detail::dist(si, t.point(0).data(), k), prev[0]);
        for (std::size_t j = 1; j < n; ++j) {
            const double pred = std::min({prev[j], prev[j - 1], cur[j - 1]});
            cur[j] = std::max(detail::dist(si, t.point(j).data(), k), pred);
        }
    }
    return cur[n - 1];
}

namespace {

// Greedy walk shared by gdk and gdk_sub: from (i, j), repeatedly move to
// whichever of (i+1, j), (i+1, j+1), (i, j+1) has the smallest point
// distance until stop_at_last_row (sub) or both ends are reached (whole).
// Out-of-range moves cost infinity, so exhausting one series forces the
// remaining moves along the other.
template <bool StopAtLastRow>
SubMatch greedy_walk(const TimeSeries& s, const TimeSeries& t, std::size_t i, std::size_t j,
                     double g, double eps) {
    const std::size_t m = s.length();
    const std::size_t n = t.length();
    const std::size_t k = s.dim();
    if (g > eps) return {g, j};

    while (StopAtLastRow ? (i != m - 1) : (i != m - 1 || j != n - 1)) {
        double d_down = kInf, d_diag = kInf, d_right = kInf;
        if (i + 1 < m) {
            d_down = detail::dist(s.point(i + 1).data(), t.point(j).data(), k);
            if (j + 1 < n) d_diag = detail::dist(s.point(i + 1).data(), t.point(j + 1).data(), k);
        }
        if (j + 1 < n) d_right = detail::dist(s.point(i).data(), t.point(j + 1).data(), k);

        double step = d_down;
        std::size_t ni = i + 1, nj = j;
        if (d_diag < step) {
            step = d_diag;
            ni = i + 1;
            nj = j + 1;
        }
        if (d_right < step) {
            step = d_right;
            ni = i;
            nj = j + 1;
        }
        i = ni;
        j = nj;
        g = std::max(g, step);
        if (g > eps) return {g, j};
    }
    return {g, j};
}

}  // namespace

double gdk(const TimeSeries& s, const TimeSeries& t, double eps) {
    check_dims(s, t, "gdk");
    const double g0 = detail::dist(s.point(0).data(), t.point(0).data(), s.dim());
    return greedy_walk<false>(s, t, 0, 0, g0, eps).distance;
}

SubMatch gdk_sub(const TimeSeries& s, const TimeSeries& t, double eps) {
    check_dims(s, t, "gdk_sub");
    const std::size_t n = t.length();
    const std::size_t k = s.dim();
    // best-matching start for the first query point; ties go to the lowest index
    std::size_t j0 = 0;
    double g0 = detail::dist(s.point(0).data(), t.point(0).data(), k);
    for (std::size_t j = 1; j < n; ++j) {
        const double d = detail::dist(s.point(0).data(), t.point(j).data(), k);
        if (d < g0) {
            g0 = d;
            j0 = j;
        }
    }
    return greedy_walk<true>(s, t, 0, j0, g0, eps);
}

namespace {

// Sparse column-by-column DP (threshold eps). Rows run over s, columns
// over t. A cell is expanded only if both its point distance and its
// accumulated value are <= eps, so every stored value is <= eps. In Sub
// mode row 0 has a virtual 0-predecessor in every column and the
// last-row value of each column is folded into the running best.
template <bool Sub>
std::pair<bool, SubMatch> sparse_engine(const TimeSeries& s, const TimeSeries& t, double eps) {
    const std::size_t m = s.length();
    const std::size_t n = t.length();
    const std::size_t k = s.dim();

    SparseColumn prev;   // stored values of column c-1
    SparseColumn cur;    // stored values of column c
    std::vector<std::size_t> active{0};  // rows to visit in the current column
    std::vector<std::size_t> next_active;

    SubMatch best;  // Sub mode only
    bool found = false;
    double whole_result = kInf;

    const auto push_next = [&](std::size_t row) {
        if (next_active.empty() || next_active.back() != row) next_active.push_back(row);
    };

    for (std::size_t c = 0; c < n; ++c) {
        cur.clear();
        next_active.clear();

        std::size_t pp = 0;              // merge pointer into prev.indices
        std::size_t ai = 0;              // position in active
        std::size_t pending = m;         // m = none; otherwise a row activated in-column
        std::size_t last_row = m;        // last row stored in cur
        double last_val = kInf;

        while (ai < active.size() || pending != m) {
            std::size_t i;
            if (pending != m) {
                i = pending;
                pending = m;
                if (ai < active.size() && active[ai] == i) ++ai;
            } else {
                i = active[ai++];
            }

            const double d = detail::dist(s.point(i).data(), t.point(c).data(), k);
            if (d > eps) continue;

            // min over predecessors: (i-1, c) from cur, (i, c-1) and (i-1, c-1) from prev
            double pred = kInf;
            if (i == 0) {
                if (Sub || c == 0) pred = 0.0;
            }
            if (pred != 0.0) {
                if (last_row == i - 1) pred = std::min(pred, last_val);
                while (pp < prev.indices.size() && prev.indices[pp] + 1 < i) ++pp;
                for (std::size_t q = pp; q < prev.indices.size() && prev.indices[q] <= i; ++q) {
                    pred = std::min(pred, prev.values[q]);
                }
            }

            const double v = std::max(d, pred);
            if (v > eps) continue;

            cur.indices.push_back(i);
            cur.values.push_back(v);
            last_row = i;
            last_val = v;

            push_next(i);
            if (i + 1 < m) {
                pending = i + 1;
                push_next(i + 1);
            }
        }

        if (!cur.indices.empty() && cur.indices.back() == m - 1) {
            const double vm = cur.values.back();
            if constexpr (Sub) {
                if (vm < best.distance) {
                    best = {vm, c};
                    found = true;
                }
            } else {
                if (c == n - 1) {
                    whole_result = vm;
                    found = true;
                }
            }
        }

        if constexpr (!Sub) {
            if (next_active.empty()) break;  // frontier died: no path can reach (m-1, n-1)
        }

        std::swap(prev, cur);
        std::swap(active, next_active);
        if constexpr (Sub) {
            if (active.empty() || active.front() != 0) {
                active.insert(active.begin(), 0);
            }
        }
    }

    if constexpr (Sub) {
        return {found, best};
    } else {
        return {found, SubMatch{whole_result, n - 1}};
    }
}

}  // namespace

ThresholdedDistance sparse_dk(const TimeSeries& s, const TimeSeries& t, double eps) {
    check_dims(s, t, "sparse_dk");
    if (eps < 0) throw std::invalid_argument("sparse_dk: eps must be nonnegative");
    const auto [found, match] = sparse_engine<false>(s, t, eps);
    if (!found) return ThresholdedDistance::exceeds(eps);
    return ThresholdedDistance::exact(match.distance);
}

std::optional<SubMatch> sparse_dk_sub(const TimeSeries& s, const TimeSeries& t, double eps) {
    check_dims(s, t, "sparse_dk_sub");
    if (eps < 0) throw std::invalid_argument("sparse_dk_sub: eps must be nonnegative");
    const auto [found, match] = sparse_engine<true>(s, t, eps);
    if (!found) return std::nullopt;
    return match;
}

bool dk_triangle_check(const TimeSeries& a, const TimeSeries& b, const TimeSeries& c) {
    return dk_full(a, c) <= dk_full(a, b) + dk_full(b, c) + 1e-9;
}

}  // namespace tswarp
