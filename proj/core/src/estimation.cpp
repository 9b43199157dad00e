#include "linklab/estimation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "linklab/errors.hpp"

namespace linklab {

ChannelEstimate ls_estimate(const ComplexVec& p_hat, const ComplexVec& p,
                            double floor_factor) {
    if (p_hat.size() != p.size())
        throw DimensionError("ls_estimate: received pilot length " +
                             std::to_string(p_hat.size()) + " != known pilot length " +
                             std::to_string(p.size()));
    ChannelEstimate est;
    est.h_hat.resize(p.size());
    double max_mag = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        est.h_hat[k] = p_hat[k] / p[k];
        max_mag = std::max(max_mag, std::abs(est.h_hat[k]));
    }
    est.regularization_floor = floor_factor * max_mag;
    return est;
}

Equalizer build_zf(const ChannelEstimate& est) {
    Equalizer eq;
    eq.inverse_gains.resize(est.h_hat.size());
    eq.clamped.assign(est.h_hat.size(), false);
    const double floor = est.regularization_floor;
    for (std::size_t k = 0; k < est.h_hat.size(); ++k) {
        const Complex h = est.h_hat[k];
        if (floor > 0.0 && std::abs(h) < floor) {
            eq.inverse_gains[k] = std::conj(h) / (floor * floor);
            eq.clamped[k] = true;
        } else {
            eq.inverse_gains[k] = Complex(1.0, 0.0) / h;
        }
    }
    return eq;
}

std::vector<ComplexVec> equalize(const Equalizer& eq, const std::vector<ComplexVec>& d_hat) {
    std::vector<ComplexVec> out(d_hat.size());
    for (std::size_t c = 0; c < d_hat.size(); ++c) {
        if (d_hat[c].size() != eq.inverse_gains.size())
            throw DimensionError("equalize: column " + std::to_string(c) + " has " +
                                 std::to_string(d_hat[c].size()) + " rows, equalizer has " +
                                 std::to_string(eq.inverse_gains.size()));
        out[c].resize(d_hat[c].size());
        for (std::size_t k = 0; k < d_hat[c].size(); ++k)
            out[c][k] = eq.inverse_gains[k] * d_hat[c][k];
    }
    return out;
}

namespace {

double energy(const ComplexVec& v) {
    double e = 0.0;
    for (const auto& z : v) e += std::norm(z);
    return e;
}

}  // namespace

double estimate_snr(const ComplexVec& g_hat, const ComplexVec& z_hat) {
    if (g_hat.size() != z_hat.size())
        throw DimensionError("estimate_snr: preamble/silence length mismatch");
    const double noise = energy(z_hat);
    if (noise == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(energy(g_hat) / noise);
}

double estimate_snr_corrected(const ComplexVec& g_hat, const ComplexVec& z_hat) {
    if (g_hat.size() != z_hat.size())
        throw DimensionError("estimate_snr: preamble/silence length mismatch");
    const double noise = energy(z_hat);
    if (noise == 0.0) return std::numeric_limits<double>::infinity();
    const double signal = energy(g_hat) - noise;
    if (signal <= 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(signal / noise);
}

}  // namespace linklab
