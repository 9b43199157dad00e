#pragma once

#include <cstdint>
#include <vector>

#include "linklab/frame.hpp"
#include "linklab/types.hpp"

namespace linklab {

struct SyncResult {
    bool detected = false;
    std::int64_t start_index = 0;  // first sample of the preamble's CP
    double peak_metric = 0.0;
};

/// Half-symbol repetition metric M(d) = |P(d)|^2 / R(d)^2 with
///   P(d) = sum_{m<L} conj(s[d+m]) * s[d+m+L],
///   R(d) = sum_{m<L} |s[d+m+L]|^2,  L = half_len.
/// Positions with R(d) = 0 yield M(d) = 0. One value per window position
/// d = 0 .. len - 2L. Throws TruncationError when the stream is shorter
/// than 2L.
std::vector<double> timing_metric(const SampleStream& s, std::size_t half_len);

/// Locates the frame via the metric plateau: takes the first run with
/// M(d) >= threshold at least n_cp/2 wide, then the midpoint of the span
/// within it where M stays above 75% of the run peak, and backs off n_cp
/// samples, which places the FFT window in the middle of the cyclic
/// prefix. Absence of a plateau (or a stream too short to evaluate) is
/// reported as detected = false, not an error.
SyncResult detect_frame(const SampleStream& s, const FrameConfig& cfg, double threshold);

}  // namespace linklab
