#include "tswarp/lower_bounds.hpp"

#include <cmath>

namespace tswarp {

double dist_to_interval(double x, double l, double u) {
    if (l > u) throw std::invalid_argument("dist_to_interval: l > u");
    if (x < l) return l - x;
    if (x > u) return x - u;
    return 0.0;
}

namespace {

// Shared kernel: sum of squared interval distances across all points and
// dimensions. lb_keogh and lb_box run exactly this, so the k = 1 case is
// bitwise identical between the two.
double box_bound(const TimeSeries& s, const Envelope& env) {
    if (s.dim() != env.dim()) {
        throw std::invalid_argument("lower bound: series dim " + std::to_string(s.dim()) +
                                    " != envelope dim " + std::to_string(env.dim()));
    }
    if (s.length() != env.length()) {
        throw std::invalid_argument("lower bound: series length " + std::to_string(s.length()) +
                                    " != envelope length " + std::to_string(env.length()));
    }
    const std::size_t n = s.length();
    const std::size_t k = s.dim();
    const double* vals = s.flat().data();
    const double* lo = env.lower_flat().data();
    const double* hi = env.upper_flat().data();

    double acc = 0.0;
    for (std::size_t f = 0; f < n * k; ++f) {
        const double x = vals[f];
        if (x < lo[f]) {
            const double d = lo[f] - x;
            acc += d * d;
        } else if (x > hi[f]) {
            const double d = x - hi[f];
            acc += d * d;
        }
    }
    return acc;
}

}  // namespace

double lb_keogh(const TimeSeries& s, const Envelope& env) {
    if (s.dim() != 1) {
        throw std::invalid_argument("lb_keogh expects a 1-dimensional series; use lb_box for k > 1");
    }
    return box_bound(s, env);
}

double lb_box(const TimeSeries& s, const Envelope& env) { return box_bound(s, env); }

double lb_sigma_min(const TimeSeries& s, const TimeSeries& t, BandRadius r) {
    if (s.dim() != t.dim()) throw std::invalid_argument("lb_sigma_min: dimensionality mismatch");
    if (s.length() != t.length()) {
        throw std::invalid_argument("lb_sigma_min requires equal lengths, got " +
                                    std::to_string(s.length()) + " and " +
                                    std::to_string(t.length()));
    }
    const std::size_t n = s.length();
    const std::size_t k = s.dim();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = (i >= r.value) ? i - r.value : 0;
        const std::size_t hi = std::min(i + r.value, n - 1);
        double best = kInf;
        for (std::size_t w = lo; w <= hi; ++w) {
            best = std::min(best, detail::sq_dist(s.point(i).data(), t.point(w).data(), k));
        }
        acc += best;
    }
    return acc;
}

TimeSeries znormalize(const TimeSeries& s) {
    const std::size_t n = s.length();
    const std::size_t k = s.dim();
    std::vector<double> out(n * k);
    for (std::size_t j = 0; j < k; ++j) {
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += s.at(i, j);
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = s.at(i, j) - mean;
            var += d * d;
        }
        var /= static_cast<double>(n);
        const double sd = std::sqrt(var);
        if (sd > 0.0) {
            for (std::size_t i = 0; i < n; ++i) out[i * k + j] = (s.at(i, j) - mean) / sd;
        } else {
            for (std::size_t i = 0; i < n; ++i) out[i * k + j] = 0.0;
        }
    }
    return TimeSeries(std::move(out), k, s.label());
}

}  // namespace tswarp
