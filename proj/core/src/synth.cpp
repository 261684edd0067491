#include "tswarp/synth.hpp"

#include <algorithm>
#include <cmath>

#include "tswarp/rng.hpp"
#include "tswarp/utils.hpp"

namespace tswarp {

namespace {

void check_common(const GenParams& p) {
    if (p.dim == 0) throw std::invalid_argument("generator: dim must be >= 1");
    if (p.length < 2) throw std::invalid_argument("generator: length must be >= 2");
    if (p.classes == 0) throw std::invalid_argument("generator: classes must be >= 1");
    if (p.reps == 0) throw std::invalid_argument("generator: reps must be >= 1");
    if (p.noise_sigma < 0) throw std::invalid_argument("generator: noise_sigma must be >= 0");
    if (p.distortion >= p.length) {
        throw std::invalid_argument("generator: distortion must be < length");
    }
}

std::map<std::string, std::string> meta_of(const GenParams& p, const char* name) {
    return {
        {"generator", name},
        {"dim", std::to_string(p.dim)},
        {"length", std::to_string(p.length)},
        {"classes", std::to_string(p.classes)},
        {"reps", std::to_string(p.reps)},
        {"noise_sigma", format_double(p.noise_sigma)},
        {"distortion", std::to_string(p.distortion)},
        {"radius", format_double(p.radius)},
        {"seed", std::to_string(p.seed)},
    };
}

// Monotone time warp: cumulative positive steps rescaled to [0, n-1] and
// clamped so every index is displaced by at most `distortion`. Clamping
// against the two monotone envelopes i -+ distortion preserves
// monotonicity.
std::vector<double> random_warp(Rng& rng, std::size_t n, std::size_t distortion) {
    std::vector<double> warp(n);
    double total = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        warp[i] = total += rng.uniform(0.25, 1.75);
    }
    const double d = static_cast<double>(distortion);
    for (std::size_t i = 0; i < n; ++i) {
        double w = warp[i] * static_cast<double>(n - 1) / total;
        w = std::clamp(w, static_cast<double>(i) - d, static_cast<double>(i) + d);
        warp[i] = std::clamp(w, 0.0, static_cast<double>(n - 1));
    }
    return warp;
}

double lerp_at(const std::vector<double>& proto, std::size_t n, std::size_t k, double pos,
               std::size_t j) {
    const std::size_t i0 = std::min(static_cast<std::size_t>(pos), n - 1);
    const std::size_t i1 = std::min(i0 + 1, n - 1);
    const double frac = pos - static_cast<double>(i0);
    return proto[i0 * k + j] + frac * (proto[i1 * k + j] - proto[i0 * k + j]);
}

}  // namespace

Dataset gen_ram(const GenParams& p) {
    check_common(p);
    if (p.kind != GenKind::Ram) throw std::invalid_argument("gen_ram: kind must be Ram");
    if (p.radius <= 0) throw std::invalid_argument("gen_ram: radius must be positive");

    const std::size_t n = p.length;
    const std::size_t k = p.dim;
    Rng rng(mix_seed(p.seed, 0x52414dULL));  // per-generator stream

    std::vector<TimeSeries> series;
    series.reserve(p.classes * p.reps);
    std::vector<double> proto(n * k);

    for (std::size_t c = 0; c < p.classes; ++c) {
        // prototype: doubly integrated accelerations, scaled into the ball
        double max_sq = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            double vel = 0.0, pos = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                vel += rng.normal();
                pos += vel;
                proto[i * k + j] = pos;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            double sq = 0.0;
            for (std::size_t j = 0; j < k; ++j) sq += proto[i * k + j] * proto[i * k + j];
            max_sq = std::max(max_sq, sq);
        }
        const double scale = max_sq > 0 ? p.radius / std::sqrt(max_sq) : 1.0;
        for (double& v : proto) v *= scale;

        for (std::size_t rep = 0; rep < p.reps; ++rep) {
            const std::vector<double> warp = random_warp(rng, n, p.distortion);
            std::vector<double> vals(n * k);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    vals[i * k + j] =
                        lerp_at(proto, n, k, warp[i], j) + p.noise_sigma * rng.normal();
                }
            }
            series.emplace_back(std::move(vals), k, std::to_string(c));
        }
    }
    return Dataset(std::move(series), meta_of(p, "ram"));
}

Dataset gen_cbf(const GenParams& p) {
    check_common(p);
    if (p.kind != GenKind::Cbf) throw std::invalid_argument("gen_cbf: kind must be Cbf");

    const std::size_t n = p.length;
    const std::size_t k = p.dim;

    // at most 3^k distinct shape tuples
    std::size_t cap = 1;
    for (std::size_t j = 0; j < k && cap < p.classes; ++j) cap *= 3;
    if (p.classes > cap) {
        throw std::invalid_argument("gen_cbf: only " + std::to_string(cap) +
                                    " distinct shape tuples exist for dim " + std::to_string(k));
    }

    Rng rng(mix_seed(p.seed, 0x434246ULL));
    std::vector<TimeSeries> series;
    series.reserve(p.classes * p.reps);

    const double nd = static_cast<double>(n);
    for (std::size_t c = 0; c < p.classes; ++c) {
        // class identity: shape per dimension (digits of c in base 3),
        // plus a class-specific onset and duration per dimension
        std::vector<int> shapes(k);
        std::size_t code = c;
        for (std::size_t j = 0; j < k; ++j) {
            shapes[j] = static_cast<int>(code % 3);
            code /= 3;
        }
        std::vector<double> onset(k), duration(k);
        for (std::size_t j = 0; j < k; ++j) {
            onset[j] = rng.uniform(0.10 * nd, 0.30 * nd);
            duration[j] = rng.uniform(0.25 * nd, 0.55 * nd);
        }

        for (std::size_t rep = 0; rep < p.reps; ++rep) {
            std::vector<double> vals(n * k);
            for (std::size_t j = 0; j < k; ++j) {
                const double shift_a = static_cast<double>(
                    rng.int_range(-static_cast<long long>(p.distortion),
                                  static_cast<long long>(p.distortion)));
                const double shift_b = static_cast<double>(
                    rng.int_range(-static_cast<long long>(p.distortion),
                                  static_cast<long long>(p.distortion)));
                double a = std::clamp(onset[j] + shift_a, 0.0, nd - 2.0);
                double b = std::clamp(onset[j] + duration[j] + shift_b, a + 1.0, nd - 1.0);
                for (std::size_t i = 0; i < n; ++i) {
                    const double x = static_cast<double>(i);
                    double v = 0.0;
                    if (x >= a && x <= b) {
                        switch (shapes[j]) {
                            case 0: v = 6.0; break;                            // cylinder
                            case 1: v = 6.0 * (x - a) / (b - a); break;        // bell
                            default: v = 6.0 * (b - x) / (b - a); break;       // funnel
                        }
                    }
                    vals[i * k + j] = v + p.noise_sigma * rng.normal();
                }
            }
            series.emplace_back(std::move(vals), k, std::to_string(c));
        }
    }
    return Dataset(std::move(series), meta_of(p, "cbf"));
}

Dataset gen_iid_gaussian(std::size_t dim, std::size_t length, std::size_t count,
                         std::uint64_t seed) {
    if (dim == 0 || length == 0 || count == 0) {
        throw std::invalid_argument("gen_iid_gaussian: dim, length and count must be >= 1");
    }
    Rng rng(mix_seed(seed, 0x494944ULL));
    std::vector<TimeSeries> series;
    series.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<double> vals(length * dim);
        for (double& v : vals) v = rng.normal();
        series.emplace_back(std::move(vals), dim);
    }
    return Dataset(std::move(series),
                   {{"generator", "iid"},
                    {"dim", std::to_string(dim)},
                    {"length", std::to_string(length)},
                    {"count", std::to_string(count)},
                    {"seed", std::to_string(seed)}});
}

Dataset gen_dataset(const GenParams& p) {
    switch (p.kind) {
        case GenKind::Ram: return gen_ram(p);
        case GenKind::Cbf: return gen_cbf(p);
        case GenKind::Iid: return gen_iid_gaussian(p.dim, p.length, p.classes * p.reps, p.seed);
    }
    throw std::invalid_argument("gen_dataset: unknown generator kind");
}

}  // namespace tswarp
