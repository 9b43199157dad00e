#pragma once

#include <vector>

#include "linklab/types.hpp"

namespace linklab {

/// Per-subcarrier complex channel gain estimated from the block pilot.
struct ChannelEstimate {
    ComplexVec h_hat;
    double regularization_floor = 0.0;  // minimum |h| accepted by build_zf
};

/// Diagonal zero-forcing equalizer (reciprocal channel gains).
/// clamped[k] marks bins where |h_hat[k]| fell below the floor and the
/// inversion was clamped; symbols from those bins are unreliable.
struct Equalizer {
    ComplexVec inverse_gains;
    std::vector<bool> clamped;
};

/// Default floor factor: floor = 1e-6 * max|h_hat|. A floor of exactly 0
/// disables clamping (pure zero forcing).
constexpr double kDefaultFloorFactor = 1e-6;

/// Least-squares estimate h_hat[k] = p_hat[k] / p[k].
/// Throws DimensionError on length mismatch. The floor defaults to
/// kDefaultFloorFactor * max|h_hat|; pass floor_factor = 0 for pure ZF.
ChannelEstimate ls_estimate(const ComplexVec& p_hat, const ComplexVec& p,
                            double floor_factor = kDefaultFloorFactor);

/// inverse_gains[k] = 1/h_hat[k], except bins with |h_hat[k]| below the
/// floor get the clamped inversion conj(h)/floor^2 and are flagged.
Equalizer build_zf(const ChannelEstimate& est);

/// Applies the equalizer row-wise: out[c][k] = inverse_gains[k] * d_hat[c][k].
/// Columns are time symbols; rows are subcarriers.
std::vector<ComplexVec> equalize(const Equalizer& eq, const std::vector<ComplexVec>& d_hat);

/// Preamble/silence energy-ratio SNR estimate in dB:
/// 10*log10(sum|g_hat|^2 / sum|z_hat|^2). Zero silence energy yields +inf.
/// Note the ratio measures (S+N)/N, so the estimate carries an analytic
/// +10*log10(1 + 10^(-snr/10)) bias; see estimate_snr_corrected.
double estimate_snr(const ComplexVec& g_hat, const ComplexVec& z_hat);

/// Bias-corrected variant: subtracts the measured noise energy from the
/// numerator before taking the ratio. Clamps to -inf when the preamble
/// energy does not exceed the noise energy.
double estimate_snr_corrected(const ComplexVec& g_hat, const ComplexVec& z_hat);

}  // namespace linklab
