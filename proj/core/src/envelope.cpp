#include "tswarp/envelope.hpp"

namespace tswarp {

Envelope::Envelope(std::vector<double> lower, std::vector<double> upper, std::size_t dim,
                   BandRadius r)
    : lower_(std::move(lower)), upper_(std::move(upper)), dim_(dim), radius_(r) {
    if (dim_ == 0 || lower_.empty() || lower_.size() != upper_.size() ||
        lower_.size() % dim_ != 0) {
        throw ValidationError("envelope arrays must hold matching n x k grids");
    }
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        if (!(lower_[i] <= upper_[i])) {
            throw ValidationError("envelope lower bound exceeds upper bound at flat index " +
                                  std::to_string(i));
        }
    }
}

namespace {

// Windowed extrema of one dimension via a monotonic index deque. cmp is
// <= for a running max, >= for a running min: the deque keeps candidate
// indices whose values are in strictly "better" order.
template <typename Cmp>
void running_extreme(const TimeSeries& t, std::size_t j, std::size_t r, Cmp better_or_equal,
                     std::vector<double>& out) {
    const std::size_t n = t.length();
    const std::size_t k = t.dim();
    std::vector<std::size_t> deque(n);  // ring-free: head/tail indices into a flat buffer
    std::size_t head = 0, tail = 0;     // [head, tail)

    std::size_t pushed = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t hi = std::min(i + r, n - 1);
        for (; pushed <= hi; ++pushed) {
            const double v = t.at(pushed, j);
            while (tail > head && better_or_equal(v, t.at(deque[tail - 1], j))) --tail;
            deque[tail++] = pushed;
        }
        const std::size_t lo = (i >= r) ? i - r : 0;
        while (deque[head] < lo) ++head;
        out[i * k + j] = t.at(deque[head], j);
    }
}

}  // namespace

Envelope envelope(const TimeSeries& t, BandRadius r) {
    const std::size_t n = t.length();
    const std::size_t k = t.dim();
    std::vector<double> lower(n * k);
    std::vector<double> upper(n * k);
    for (std::size_t j = 0; j < k; ++j) {
        running_extreme(t, j, r.value, [](double a, double b) { return a <= b; }, lower);
        running_extreme(t, j, r.value, [](double a, double b) { return a >= b; }, upper);
    }
    return Envelope(std::move(lower), std::move(upper), k, r);
}

}  // namespace tswarp
