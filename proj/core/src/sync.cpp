#include "linklab/sync.hpp"

#include <string>

#include "linklab/errors.hpp"

namespace linklab {

std::vector<double> timing_metric(const SampleStream& s, std::size_t half_len) {
    const std::size_t n = s.size();
    if (half_len == 0 || n < 2 * half_len)
        throw TruncationError("timing_metric: stream of " + std::to_string(n) +
                              " samples is shorter than 2*half_len = " +
                              std::to_string(2 * half_len));

    // Prefix sums of the lag products and of the trailing-window energy
    // give every window in O(1).
    const std::size_t m = n - half_len;          // valid lag-product count
    std::vector<Complex> corr_prefix(m + 1, Complex(0.0, 0.0));
    std::vector<double> energy_prefix(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        corr_prefix[i + 1] = corr_prefix[i] + std::conj(s.samples[i]) * s.samples[i + half_len];
        energy_prefix[i + 1] = energy_prefix[i] + std::norm(s.samples[i + half_len]);
    }

    std::vector<double> metric(n - 2 * half_len + 1);
    for (std::size_t d = 0; d < metric.size(); ++d) {
        const Complex p = corr_prefix[d + half_len] - corr_prefix[d];
        const double r = energy_prefix[d + half_len] - energy_prefix[d];
        metric[d] = (r > 0.0) ? std::norm(p) / (r * r) : 0.0;
    }
    return metric;
}

namespace {

// Fraction of the run peak that still counts as plateau top. The top span
// is nearly symmetric about the plateau center even when frame payloads
// correlate with the preamble tail, so its midpoint is a stabler anchor
// than the threshold-crossing midpoint.
constexpr double kPlateauPeakFraction = 0.75;

}  // namespace

SyncResult detect_frame(const SampleStream& s, const FrameConfig& cfg, double threshold) {
    SyncResult result;
    if (s.size() < cfg.n_fft) return result;

    const std::vector<double> metric = timing_metric(s, cfg.n_fft / 2);

    // First run of M(d) >= threshold at least n_cp/2 wide. The preamble is
    // the head of the frame, so the first qualifying run belongs to it;
    // later runs can be payload artifacts (structured data columns also
    // correlate at lag n_fft/2).
    const std::size_t min_run = std::max<std::size_t>(1, cfg.n_cp / 2);
    std::size_t run_start = 0, run_len = 0;
    bool have_run = false;
    for (std::size_t d = 0; d <= metric.size() && !have_run; ++d) {
        if (d < metric.size() && metric[d] >= threshold) {
            if (run_len == 0) run_start = d;
            ++run_len;
        } else {
            if (run_len >= min_run) have_run = true;
            else run_len = 0;
        }
    }
    if (!have_run) return result;

    double peak = 0.0;
    for (std::size_t d = run_start; d < run_start + run_len; ++d)
        peak = std::max(peak, metric[d]);

    // Midpoint of the span where the metric stays near the peak.
    const double top = kPlateauPeakFraction * peak;
    std::size_t top_first = run_start, top_last = run_start + run_len - 1;
    while (metric[top_first] < top) ++top_first;
    while (metric[top_last] < top) --top_last;

    const std::int64_t mid = static_cast<std::int64_t>(top_first + top_last) / 2;
    result.detected = true;
    result.start_index = mid - static_cast<std::int64_t>(cfg.n_cp);
    result.peak_metric = peak;
    return result;
}

}  // namespace linklab
