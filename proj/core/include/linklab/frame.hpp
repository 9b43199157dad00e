#pragma once

#include <cstdint>
#include <vector>

#include "linklab/types.hpp"

namespace linklab {

/// Static link parameters. Defaults follow the reference system:
/// 128-point FFT, 48 occupied subcarriers, 16-sample cyclic prefix,
/// one data column per frame, BPSK payload.
struct FrameConfig {
    std::size_t n_fft = 128;       // subcarrier count, power of two
    std::size_t n_occ = 48;        // occupied subcarriers, even
    std::size_t n_guard = 40;      // one-sided empty subcarriers
    std::size_t n_cp = 16;         // cyclic-prefix samples
    std::size_t n_data_cols = 1;   // data columns per frame
    bool power_scaling = false;    // per-column RMS normalization before CP
    bool null_band_center = false; // zero the band-center subcarrier
    std::uint64_t preamble_seed = 1;
    std::uint64_t pilot_seed = 2;

    std::size_t frame_cols() const { return 3 + n_data_cols; }
    std::size_t samples_per_col() const { return n_fft + n_cp; }
    std::size_t samples_per_frame() const { return frame_cols() * samples_per_col(); }

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// One frequency-domain frame: preamble | pilot | data columns | silence.
/// All column vectors have length n_occ; silence is identically zero.
struct OfdmFrame {
    ComplexVec preamble;
    ComplexVec pilot;
    std::vector<ComplexVec> data;  // n_data_cols columns of length n_occ
    ComplexVec silence;
};

/// Synchronization preamble: even-indexed occupied subcarriers carry PN
/// QPSK symbols scaled by sqrt(2) (values from {+-1 +-j}), odd-indexed are
/// zero, so the useful time-domain part repeats after n_fft/2 samples.
/// Deterministic in cfg.preamble_seed.
ComplexVec generate_preamble(const FrameConfig& cfg);

/// Block-type pilot: unit-magnitude BPSK (+-1) on every occupied
/// subcarrier. Deterministic in cfg.pilot_seed.
ComplexVec generate_pilot(const FrameConfig& cfg);

/// Builds a frame from data symbols (n_data_cols columns of length n_occ).
/// Throws DimensionError on shape mismatch.
OfdmFrame assemble_frame(const FrameConfig& cfg, const std::vector<ComplexVec>& data_symbols);

/// Places an occupied-band column into the length-n_fft IFFT input.
/// Fixed layout: occupied index j maps to FFT bin n_guard + j, leaving
/// n_guard empty bins on each side of the band (see docs/frame-format.md).
ComplexVec map_subcarriers(const FrameConfig& cfg, const ComplexVec& col);

/// Extracts the occupied band from a length-n_fft spectrum.
ComplexVec demap_subcarriers(const FrameConfig& cfg, const ComplexVec& bins);

/// Serializes a frame: per column map -> ifft -> optional RMS scaling ->
/// cyclic prefix, concatenated in order preamble, pilot, data..., silence.
/// Zero-energy columns are never scaled.
SampleStream frame_to_samples(const FrameConfig& cfg, const OfdmFrame& frame);

/// Parses one received frame starting at sample index `start` (first sample
/// of the preamble's CP): per column drop CP, fft, demap.
/// Throws TruncationError if the stream ends before a whole frame.
OfdmFrame samples_to_frame(const FrameConfig& cfg, const SampleStream& s, std::int64_t start);

}  // namespace linklab
