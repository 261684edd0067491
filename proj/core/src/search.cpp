#include "tswarp/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "tswarp/dtw.hpp"
#include "tswarp/envelope.hpp"
#include "tswarp/lower_bounds.hpp"

namespace tswarp {

namespace {

// Candidates are scanned in fixed-size blocks; the pruning threshold is
// frozen at the start of each block and block members may be evaluated
// concurrently. Freezing makes every prune/abandon decision a function of
// the inputs alone, so reports do not depend on the thread count.
constexpr std::size_t kScanBlock = 64;

void parallel_for(std::size_t first, std::size_t last, int threads,
                  const std::function<void(std::size_t)>& fn) {
    const std::size_t count = last - first;
    if (threads <= 1 || count < 2) {
        for (std::size_t i = first; i < last; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = first + w; i < last; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// k-best accumulator ordered by (value, index); lower index wins ties, so
// the final set matches a brute-force scan sorted the same way. Offers
// must arrive in ascending index order for pruning on >= to stay sound.
class KBest {
public:
    explicit KBest(std::size_t k) : k_(k) {}

    [[nodiscard]] double threshold() const {
        return entries_.size() == k_ ? entries_.back().value : kInf;
    }

    void offer(std::size_t index, double value, bool exact) {
        for (auto& e : entries_) {
            if (e.index == index) {
                e.value = value;
                e.exact = exact;
                resort();
                return;
            }
        }
        if (entries_.size() < k_) {
            entries_.push_back({index, value, exact});
            resort();
        } else if (std::pair(value, index) <
                   std::pair(entries_.back().value, entries_.back().index)) {
            entries_.back() = {index, value, exact};
            resort();
        }
    }

    [[nodiscard]] bool all_exact() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const auto& e) { return e.exact; });
    }

    [[nodiscard]] std::vector<Neighbor> neighbors() const {
        std::vector<Neighbor> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back({e.index, e.value});
        return out;
    }

private:
    struct Entry {
        std::size_t index;
        double value;
        bool exact;
    };

    void resort() {
        std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
            return std::pair(a.value, a.index) < std::pair(b.value, b.index);
        });
    }

    std::size_t k_;
    std::vector<Entry> entries_;
};

void check_query(const TimeSeries& query, const Dataset& data, bool equal_lengths,
                 const char* op) {
    if (query.dim() != data.dim()) {
        throw std::invalid_argument(std::string(op) + ": query dim " +
                                    std::to_string(query.dim()) + " != dataset dim " +
                                    std::to_string(data.dim()));
    }
    if (equal_lengths) {
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (data[i].length() != query.length()) {
                throw std::invalid_argument(std::string(op) + ": series " + std::to_string(i) +
                                            " length differs from the query (lower bounds "
                                            "require equal lengths)");
            }
        }
    }
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

SearchReport knn_dtw(const TimeSeries& query, const Dataset& data, std::size_t k, BandRadius r,
                     int threads) {
    if (k == 0) throw std::invalid_argument("knn_dtw: k must be positive");
    check_query(query, data, /*equal_lengths=*/true, "knn_dtw");
    const auto start = Clock::now();

    const std::size_t n = data.size();
    const Envelope env_q = envelope(query, r);  // role swap: one envelope, n bound checks
    KBest best(std::min(k, n));
    SearchReport report;

    struct Outcome {
        double lb = 0.0;
        ThresholdedDistance td;
        bool pruned = false;
    };
    std::vector<Outcome> outcomes(std::min(kScanBlock, n));

    for (std::size_t b0 = 0; b0 < n; b0 += kScanBlock) {
        const std::size_t b1 = std::min(b0 + kScanBlock, n);
        const double eps = best.threshold();
        parallel_for(b0, b1, threads, [&](std::size_t i) {
            Outcome& out = outcomes[i - b0];
            out.lb = lb_box(data[i], env_q);
            out.pruned = out.lb >= eps;
            if (!out.pruned) out.td = dtw_early_abandon(query, data[i], r, eps);
        });
        for (std::size_t i = b0; i < b1; ++i) {
            const Outcome& out = outcomes[i - b0];
            ++report.counters.lb_computed;
            if (out.pruned) {
                ++report.counters.lb_pruned;
            } else if (out.td.is_exact()) {
                ++report.counters.full_dp;
                best.offer(i, out.td.value, true);
            } else {
                ++report.counters.early_abandoned;
            }
        }
    }

    report.neighbors = best.neighbors();
    report.wall_time_seconds = seconds_since(start);
    return report;
}

SearchReport knn_dk(const TimeSeries& query, const Dataset& data, std::size_t k, int threads) {
    if (k == 0) throw std::invalid_argument("knn_dk: k must be positive");
    check_query(query, data, /*equal_lengths=*/false, "knn_dk");
    const auto start = Clock::now();

    const std::size_t n = data.size();
    KBest best(std::min(k, n));
    SearchReport report;

    // phase 1: greedy upper bounds seed the threshold
    std::vector<double> ubs(std::min(kScanBlock, n));
    for (std::size_t b0 = 0; b0 < n; b0 += kScanBlock) {
        const std::size_t b1 = std::min(b0 + kScanBlock, n);
        const double eps = best.threshold();
        parallel_for(b0, b1, threads,
                     [&](std::size_t i) { ubs[i - b0] = gdk(query, data[i], eps); });
        for (std::size_t i = b0; i < b1; ++i) {
            ++report.counters.gdk_calls;
            best.offer(i, ubs[i - b0], false);
        }
    }

    // phase 2: sparse DP against the running k-th best; exact results
    // replace the seeds
    std::vector<ThresholdedDistance> tds(std::min(kScanBlock, n));
    for (std::size_t b0 = 0; b0 < n; b0 += kScanBlock) {
        const std::size_t b1 = std::min(b0 + kScanBlock, n);
        const double eps = best.threshold();
        parallel_for(b0, b1, threads,
                     [&](std::size_t i) { tds[i - b0] = sparse_dk(query, data[i], eps); });
        for (std::size_t i = b0; i < b1; ++i) {
            if (tds[i - b0].is_exact()) {
                ++report.counters.full_dp;
                best.offer(i, tds[i - b0].value, true);
            } else {
                ++report.counters.early_abandoned;
            }
        }
    }

    report.neighbors = best.neighbors();
    report.wall_time_seconds = seconds_since(start);
    return report;
}

SearchReport epsnn_dk(const TimeSeries& query, const Dataset& data, double eps, int threads) {
    if (eps < 0) throw std::invalid_argument("epsnn_dk: eps must be nonnegative");
    check_query(query, data, /*equal_lengths=*/false, "epsnn_dk");
    const auto start = Clock::now();

    const std::size_t n = data.size();
    SearchReport report;
    std::vector<ThresholdedDistance> tds(n);
    parallel_for(0, n, threads, [&](std::size_t i) { tds[i] = sparse_dk(query, data[i], eps); });
    for (std::size_t i = 0; i < n; ++i) {
        if (tds[i].is_exact()) {
            ++report.counters.full_dp;
            report.neighbors.push_back({i, tds[i].value});
        } else {
            ++report.counters.early_abandoned;
        }
    }
    std::sort(report.neighbors.begin(), report.neighbors.end(),
              [](const Neighbor& a, const Neighbor& b) {
                  return std::pair(a.distance, a.index) < std::pair(b.distance, b.index);
              });
    report.wall_time_seconds = seconds_since(start);
    return report;
}

std::optional<SubMatch> sub_search_dk(const TimeSeries& query, const TimeSeries& haystack,
                                      double eps) {
    if (query.dim() != haystack.dim()) {
        throw std::invalid_argument("sub_search_dk: dimensionality mismatch");
    }
    const SubMatch seed = gdk_sub(query, haystack, eps);
    return sparse_dk_sub(query, haystack, std::min(eps, seed.distance));
}

SearchReport knn_dk_sub(const TimeSeries& query, const Dataset& data, std::size_t k,
                        int threads) {
    if (k == 0) throw std::invalid_argument("knn_dk_sub: k must be positive");
    check_query(query, data, /*equal_lengths=*/false, "knn_dk_sub");
    const auto start = Clock::now();

    const std::size_t n = data.size();
    KBest best(std::min(k, n));
    SearchReport report;
    std::vector<std::optional<SubMatch>> matches(std::min(kScanBlock, n));

    for (std::size_t b0 = 0; b0 < n; b0 += kScanBlock) {
        const std::size_t b1 = std::min(b0 + kScanBlock, n);
        const double eps = best.threshold();
        parallel_for(b0, b1, threads,
                     [&](std::size_t i) { matches[i - b0] = sub_search_dk(query, data[i], eps); });
        for (std::size_t i = b0; i < b1; ++i) {
            ++report.counters.gdk_calls;
            if (matches[i - b0]) {
                ++report.counters.full_dp;
                best.offer(i, matches[i - b0]->distance, true);
            } else {
                ++report.counters.early_abandoned;
            }
        }
    }

    report.neighbors = best.neighbors();
    report.wall_time_seconds = seconds_since(start);
    return report;
}

}  // namespace tswarp
