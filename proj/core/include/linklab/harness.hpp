#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linklab/channel.hpp"
#include "linklab/frame.hpp"
#include "linklab/types.hpp"

namespace linklab {

/// BER history granularity (bits per block).
constexpr std::uint64_t kBerBlockBits = 100000;

/// Everything a link run needs besides the bit budget.
///
/// The configured channel SNR is the mean received per-subcarrier SNR in
/// the occupied band. Noise is white over the full sampling bandwidth, so
/// the per-sample variance is set to mean_bin_energy / (n_fft * snr); the
/// harness derives that reference exactly from the transmitted waveform.
/// This convention matches both the preamble/silence SNR estimator and
/// the analytic BPSK BER curve, and leaves the channel taps unnormalized
/// (tap gain shifts the per-bin SNR profile, not the configured mean).
struct LinkOptions {
    FrameConfig frame;
    ChannelModel channel;
    std::uint64_t master_seed = 1;
    double sync_threshold = 0.5;

    /// Use the ground-truth frame position instead of the detector
    /// (calibration runs).
    bool known_timing = false;
    /// Equalize with the analytic channel response instead of the pilot
    /// estimate (calibration runs).
    bool genie_equalizer = false;
    /// Average LS estimates cumulatively across the frames of a run.
    bool average_estimates = false;
    /// Use the noise-energy-corrected SNR estimator for reporting.
    bool corrected_snr = false;

    /// Payload bytes, cycled to fill capacity.
    std::vector<std::uint8_t> message = {1,  2,  3,  4,  5,  6,  7,  8,  9,  10,
                                         11, 12, 13, 14, 15, 16, 17, 18, 19, 20};
    /// Per-frame random lead-in of noise samples, uniform in [0, max].
    std::size_t max_frame_delay = 256;

    std::size_t bits_per_frame() const { return frame.n_occ * frame.n_data_cols; }
};

struct BerReport {
    std::uint64_t bits_total = 0;
    std::uint64_t bit_errors = 0;
    double ber = 0.0;
    /// (block_index, ber) per completed 100,000-bit block.
    std::vector<std::pair<std::uint64_t, double>> block_history;
    double snr_configured = 0.0;      // dB; +inf when noiseless
    double snr_estimated_mean = 0.0;  // mean per-frame estimate over detected frames
    std::uint64_t frames_detected = 0;
    std::uint64_t frames_missed = 0;
};

struct SweepRow {
    double snr_db;
    double ber;
    double snr_est_mean;
    double missed_frac;
};

struct SweepResult {
    std::vector<SweepRow> rows;  // sorted by snr_db ascending
};

struct ChanEstRow {
    std::size_t bin;  // occupied-band index, 0 .. n_occ-1
    Complex true_h;
    Complex est_h;  // mean over frames
};

struct ChanEstDump {
    std::vector<ChanEstRow> rows;
    double max_abs_error = 0.0;  // max_k |est - true|
};

/// Runs ceil(n_bits / capacity) frames through the channel with random
/// per-frame lead-ins. Missed detections account their bits as 50% errors
/// (alternating-bit pattern, so block splits stay deterministic).
BerReport run_link(const LinkOptions& opt, std::uint64_t n_bits);

/// One run_link per SNR point with seed master_seed XOR point-index.
/// Points may run concurrently (`threads` > 1); results are merged in
/// sorted-SNR order either way, so serial and parallel runs are
/// bit-identical.
SweepResult sweep_snr(const LinkOptions& opt, const std::vector<double>& snr_list,
                      std::uint64_t n_bits_per_point, unsigned threads = 1);

/// Channel-estimation experiment with ground-truth timing: per-bin true
/// response versus the LS estimate averaged over n_frames. Isolates
/// estimation quality from synchronization.
ChanEstDump run_chanest(const LinkOptions& opt, std::size_t n_frames);

}  // namespace linklab
