#include "linklab/channel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "linklab/errors.hpp"

namespace linklab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

bool ChannelModel::noiseless() const {
    return !snr_db.has_value() || std::isinf(*snr_db);
}

void ChannelModel::validate() const {
    if (taps.empty()) throw ConfigError("channel taps must not be empty");
    bool any = false;
    for (const auto& t : taps) any = any || (t != Complex(0.0, 0.0));
    if (!any) throw ConfigError("channel taps must not be all zero");
}

SampleStream apply_fir(const ComplexVec& taps, const SampleStream& s) {
    if (taps.empty()) throw ConfigError("channel taps must not be empty");
    SampleStream out;
    out.origin = s.origin;
    out.samples.assign(s.size() + taps.size() - 1, Complex(0.0, 0.0));
    for (std::size_t n = 0; n < s.size(); ++n) {
        const Complex x = s.samples[n];
        for (std::size_t m = 0; m < taps.size(); ++m) {
            out.samples[n + m] += taps[m] * x;
        }
    }
    return out;
}

double mean_active_power(const SampleStream& s) {
    double energy = 0.0;
    std::size_t active = 0;
    for (const auto& v : s.samples) {
        const double p = std::norm(v);
        if (p > 0.0) {
            energy += p;
            ++active;
        }
    }
    return active ? energy / static_cast<double>(active) : 0.0;
}

SampleStream add_awgn(const SampleStream& s, double snr_db, Rng& rng) {
    if (std::isinf(snr_db) && snr_db > 0) return s;

    const double signal_power = mean_active_power(s);
    if (signal_power == 0.0)
        throw DegenerateInputError("add_awgn: stream carries no signal power");
    const double noise_power = signal_power / std::pow(10.0, snr_db / 10.0);
    const double sigma = std::sqrt(noise_power / 2.0);  // per real component

    SampleStream out = s;
    for (auto& v : out.samples) {
        const auto [a, b] = rng.gaussian_pair();
        v += Complex(sigma * a, sigma * b);
    }
    return out;
}

ComplexVec frequency_response(const ComplexVec& taps, std::size_t n_fft) {
    if (taps.empty()) throw ConfigError("channel taps must not be empty");
    if (n_fft < taps.size())
        throw ConfigError("frequency_response: n_fft (" + std::to_string(n_fft) +
                          ") smaller than tap count (" + std::to_string(taps.size()) + ")");
    ComplexVec h(n_fft);
    for (std::size_t k = 0; k < n_fft; ++k) {
        Complex acc(0.0, 0.0);
        for (std::size_t m = 0; m < taps.size(); ++m) {
            const double ang = -2.0 * kPi * static_cast<double>(k) * static_cast<double>(m) /
                               static_cast<double>(n_fft);
            acc += taps[m] * Complex(std::cos(ang), std::sin(ang));
        }
        h[k] = acc;
    }
    return h;
}

SampleStream apply_channel(const ChannelModel& ch, const SampleStream& s, Rng& rng,
                           double snr_offset_db) {
    ch.validate();
    SampleStream delayed;
    delayed.origin = s.origin;
    delayed.samples.assign(ch.delay, Complex(0.0, 0.0));
    delayed.samples.insert(delayed.samples.end(), s.samples.begin(), s.samples.end());
    SampleStream faded = apply_fir(ch.taps, delayed);
    if (ch.noiseless()) return faded;
    return add_awgn(faded, *ch.snr_db + snr_offset_db, rng);
}

}  // namespace linklab
