#include "linklab/frame.hpp"

#include <cmath>
#include <string>

#include "linklab/errors.hpp"
#include "linklab/fft.hpp"
#include "linklab/rng.hpp"

namespace linklab {

void FrameConfig::validate() const {
    if (!is_power_of_two(n_fft))
        throw ConfigError("n_fft must be a power of two, got " + std::to_string(n_fft));
    if (n_occ == 0 || n_occ % 2 != 0)
        throw ConfigError("n_occ must be even and positive, got " + std::to_string(n_occ));
    if (n_occ + 2 * n_guard != n_fft)
        throw ConfigError("n_guard must satisfy n_occ + 2*n_guard = n_fft (n_occ=" +
                          std::to_string(n_occ) + ", n_guard=" + std::to_string(n_guard) +
                          ", n_fft=" + std::to_string(n_fft) + ")");
    if (n_cp >= n_fft)
        throw ConfigError("n_cp must be smaller than n_fft, got " + std::to_string(n_cp));
    if (n_data_cols < 1)
        throw ConfigError("n_data_cols must be at least 1");
}

ComplexVec generate_preamble(const FrameConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.preamble_seed);
    ComplexVec g(cfg.n_occ, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < cfg.n_occ; k += 2) {
        const std::uint64_t u = rng.next_u64();
        const double re = (u & 1) ? -1.0 : 1.0;
        const double im = (u & 2) ? -1.0 : 1.0;
        g[k] = Complex(re, im);  // |g[k]| = sqrt(2)
    }
    if (cfg.null_band_center) g[cfg.n_occ / 2] = Complex(0.0, 0.0);
    return g;
}

ComplexVec generate_pilot(const FrameConfig& cfg) {
    cfg.validate();
    Rng rng(cfg.pilot_seed);
    ComplexVec p(cfg.n_occ);
    for (std::size_t k = 0; k < cfg.n_occ; ++k) {
        p[k] = Complex((rng.next_u64() & 1) ? -1.0 : 1.0, 0.0);
    }
    return p;
}

OfdmFrame assemble_frame(const FrameConfig& cfg, const std::vector<ComplexVec>& data_symbols) {
    cfg.validate();
    if (data_symbols.size() != cfg.n_data_cols)
        throw DimensionError("expected " + std::to_string(cfg.n_data_cols) +
                             " data columns, got " + std::to_string(data_symbols.size()));
    for (const auto& col : data_symbols) {
        if (col.size() != cfg.n_occ)
            throw DimensionError("data column length " + std::to_string(col.size()) +
                                 " != n_occ = " + std::to_string(cfg.n_occ));
    }
    OfdmFrame f;
    f.preamble = generate_preamble(cfg);
    f.pilot = generate_pilot(cfg);
    f.data = data_symbols;
    f.silence.assign(cfg.n_occ, Complex(0.0, 0.0));
    return f;
}

ComplexVec map_subcarriers(const FrameConfig& cfg, const ComplexVec& col) {
    if (col.size() != cfg.n_occ)
        throw DimensionError("column length " + std::to_string(col.size()) +
                             " != n_occ = " + std::to_string(cfg.n_occ));
    ComplexVec bins(cfg.n_fft, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < cfg.n_occ; ++j) bins[cfg.n_guard + j] = col[j];
    return bins;
}

ComplexVec demap_subcarriers(const FrameConfig& cfg, const ComplexVec& bins) {
    if (bins.size() != cfg.n_fft)
        throw DimensionError("spectrum length " + std::to_string(bins.size()) +
                             " != n_fft = " + std::to_string(cfg.n_fft));
    ComplexVec col(cfg.n_occ);
    for (std::size_t j = 0; j < cfg.n_occ; ++j) col[j] = bins[cfg.n_guard + j];
    return col;
}

namespace {

void append_column(const FrameConfig& cfg, const ComplexVec& col, ComplexVec& out) {
    ComplexVec t = ifft(map_subcarriers(cfg, col));
    if (cfg.power_scaling) {
        double energy = 0.0;
        for (const auto& v : t) energy += std::norm(v);
        if (energy > 0.0) {
            const double rms = std::sqrt(energy / static_cast<double>(t.size()));
            for (auto& v : t) v /= rms;
        }
        // zero-energy columns (silence) pass through unscaled
    }
    for (std::size_t i = t.size() - cfg.n_cp; i < t.size(); ++i) out.push_back(t[i]);
    out.insert(out.end(), t.begin(), t.end());
}

}  // namespace

SampleStream frame_to_samples(const FrameConfig& cfg, const OfdmFrame& frame) {
    cfg.validate();
    SampleStream s;
    s.samples.reserve(cfg.samples_per_frame());
    append_column(cfg, frame.preamble, s.samples);
    append_column(cfg, frame.pilot, s.samples);
    for (const auto& col : frame.data) append_column(cfg, col, s.samples);
    append_column(cfg, frame.silence, s.samples);
    return s;
}

OfdmFrame samples_to_frame(const FrameConfig& cfg, const SampleStream& s, std::int64_t start) {
    cfg.validate();
    const std::int64_t needed = static_cast<std::int64_t>(cfg.samples_per_frame());
    if (start < 0 || start + needed > static_cast<std::int64_t>(s.size()))
        throw TruncationError("stream has " + std::to_string(s.size()) +
                              " samples, frame needs [" + std::to_string(start) + ", " +
                              std::to_string(start + needed) + ")");

    auto rx_column = [&](std::size_t col_index) {
        const std::size_t base =
            static_cast<std::size_t>(start) + col_index * cfg.samples_per_col() + cfg.n_cp;
        ComplexVec t(s.samples.begin() + base, s.samples.begin() + base + cfg.n_fft);
        return demap_subcarriers(cfg, fft(t));
    };

    OfdmFrame f;
    f.preamble = rx_column(0);
    f.pilot = rx_column(1);
    f.data.resize(cfg.n_data_cols);
    for (std::size_t c = 0; c < cfg.n_data_cols; ++c) f.data[c] = rx_column(2 + c);
    f.silence = rx_column(cfg.frame_cols() - 1);
    return f;
}

}  // namespace linklab
