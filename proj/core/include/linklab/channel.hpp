#pragma once

#include <cstdint>
#include <optional>

#include "linklab/rng.hpp"
#include "linklab/types.hpp"

namespace linklab {

/// Static multipath + noise model applied to a sample stream.
/// `snr_db` empty means noiseless. `delay` zeros are prepended before the
/// FIR when the model is applied as a whole.
struct ChannelModel {
    ComplexVec taps{Complex(1.0, 0.0)};
    std::optional<double> snr_db;  // occupied-band SNR when used by the harness
    std::size_t delay = 0;
    std::uint64_t noise_seed = 0;

    bool noiseless() const;

    /// Throws ConfigError on empty or all-zero taps.
    void validate() const;
};

/// Linear convolution y[n] = sum_m taps[m] * x[n-m].
/// Output length = input length + taps length - 1.
SampleStream apply_fir(const ComplexVec& taps, const SampleStream& s);

/// Mean power over the nonzero samples of s (the reference power used by
/// add_awgn; silence and idle padding carry exact zeros and are excluded).
/// Returns 0 for an all-zero stream.
double mean_active_power(const SampleStream& s);

/// Adds circularly-symmetric complex Gaussian noise with per-sample
/// variance P_sig / 10^(snr_db/10), where P_sig is the mean power of the
/// nonzero (non-silence) samples of s. Infinite snr_db returns the input
/// unchanged. Throws DegenerateInputError when the stream carries no power.
SampleStream add_awgn(const SampleStream& s, double snr_db, Rng& rng);

/// H[k] = sum_m taps[m] * exp(-j*2*pi*k*m/n_fft) for k = 0..n_fft-1.
/// Requires n_fft >= taps length.
ComplexVec frequency_response(const ComplexVec& taps, std::size_t n_fft);

/// Full model: prepend delay zeros, convolve with taps, add noise at
/// snr_db + snr_offset_db (offset lets callers re-reference the SNR, e.g.
/// to the occupied band).
SampleStream apply_channel(const ChannelModel& ch, const SampleStream& s, Rng& rng,
                           double snr_offset_db = 0.0);

}  // namespace linklab
