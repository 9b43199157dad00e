#include <doctest.h>

#include <cmath>

#include "linklab/channel.hpp"
#include "linklab/errors.hpp"
#include "linklab/fft.hpp"
#include "test_helpers.hpp"

using namespace linklab;
using namespace testutil;

namespace {
const ComplexVec kPaperTaps = {Complex(0.8, 0.9), Complex(0.6, 0.7)};
}

TEST_CASE("single unit tap is the identity") {
    Rng rng(61);
    SampleStream s{random_vec(rng, 200), 0};
    const SampleStream y = apply_fir({Complex(1, 0)}, s);
    CHECK(max_abs_diff(y.samples, s.samples) == 0.0);
}

TEST_CASE("impulse response equals the taps") {
    SampleStream delta{ComplexVec(1, Complex(1, 0)), 0};
    const SampleStream y = apply_fir(kPaperTaps, delta);
    REQUIRE(y.size() == 2);
    CHECK(y.samples[0] == kPaperTaps[0]);
    CHECK(y.samples[1] == kPaperTaps[1]);
}

TEST_CASE("convolution matches the double-loop oracle") {
    Rng rng(62);
    const ComplexVec taps = random_vec(rng, 4);
    SampleStream s{random_vec(rng, 257), 0};
    const SampleStream y = apply_fir(taps, s);
    CHECK(y.size() == 260);
    CHECK(max_abs_diff(y.samples, conv_oracle(taps, s.samples)) < 1e-12);
}

TEST_CASE("convolution is linear and shift equivariant") {
    Rng rng(63);
    const ComplexVec taps = random_vec(rng, 3);
    const ComplexVec a = random_vec(rng, 100);
    const ComplexVec b = random_vec(rng, 100);

    ComplexVec mix(100);
    for (std::size_t i = 0; i < 100; ++i) mix[i] = 2.0 * a[i] - Complex(0, 1) * b[i];
    const auto ya = apply_fir(taps, {a, 0}).samples;
    const auto yb = apply_fir(taps, {b, 0}).samples;
    const auto ym = apply_fir(taps, {mix, 0}).samples;
    ComplexVec expect(ya.size());
    for (std::size_t i = 0; i < ya.size(); ++i)
        expect[i] = 2.0 * ya[i] - Complex(0, 1) * yb[i];
    CHECK(max_abs_diff(ym, expect) < 1e-12);

    // prepending zeros shifts the output by the same amount
    ComplexVec shifted(5, Complex(0, 0));
    shifted.insert(shifted.end(), a.begin(), a.end());
    const auto ys = apply_fir(taps, {shifted, 0}).samples;
    for (std::size_t i = 0; i < ya.size(); ++i) CHECK(std::abs(ys[i + 5] - ya[i]) < 1e-12);
}

TEST_CASE("frequency response basics") {
    const ComplexVec flat = frequency_response({Complex(1, 0)}, 16);
    for (const auto& v : flat) CHECK(std::abs(v - Complex(1, 0)) < 1e-12);

    // matches the fft of the zero-padded taps
    Rng rng(64);
    const ComplexVec taps = random_vec(rng, 5);
    ComplexVec padded = taps;
    padded.resize(128, Complex(0, 0));
    CHECK(max_abs_diff(frequency_response(taps, 128), fft(padded)) < 1e-12);

    CHECK_THROWS_AS(frequency_response(taps, 4), ConfigError);
    CHECK_THROWS_AS(frequency_response(ComplexVec{}, 8), ConfigError);
}

TEST_CASE("reference two-tap channel has its notch inside the occupied band") {
    const ComplexVec h = frequency_response(kPaperTaps, 128);
    std::size_t min_bin = 0;
    double min_mag = 1e9;
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (std::abs(h[k]) < min_mag) {
            min_mag = std::abs(h[k]);
            min_bin = k;
        }
    }
    // |h0 - h1| at the half-rate bin
    CHECK(min_bin == 64);
    CHECK(min_mag == doctest::Approx(std::abs(kPaperTaps[0] - kPaperTaps[1])));
    // occupied index = bin - n_guard lands in the 20..30 attenuation band
    const std::size_t occupied_index = min_bin - 40;
    CHECK(occupied_index >= 20);
    CHECK(occupied_index <= 30);
}

TEST_CASE("awgn: noiseless passthrough and determinism") {
    Rng rng(65);
    SampleStream s{random_vec(rng, 64), 0};
    Rng n1(7), n2(7), n3(8);
    const auto inf = std::numeric_limits<double>::infinity();
    CHECK(max_abs_diff(add_awgn(s, inf, n1).samples, s.samples) == 0.0);

    const auto y1 = add_awgn(s, 10.0, n1);
    Rng n1b(7);
    const auto y1b = add_awgn(s, 10.0, n1b);
    CHECK(max_abs_diff(y1.samples, y1b.samples) == 0.0);
    const auto y3 = add_awgn(s, 10.0, n3);
    CHECK(max_abs_diff(y1.samples, y3.samples) > 0.0);
}

TEST_CASE("awgn: noise power tracks the active-sample reference") {
    // unit-power stream with an exact-zero (silence-like) gap: the gap is
    // excluded from the reference but still receives noise
    SampleStream s;
    s.samples.assign(1000000, Complex(1, 0));
    for (std::size_t i = 500; i < 600; ++i) s.samples[i] = Complex(0, 0);
    Rng rng(66);
    const SampleStream y = add_awgn(s, 0.0, rng);
    double noise = 0;
    for (std::size_t i = 0; i < y.size(); ++i) noise += std::norm(y.samples[i] - s.samples[i]);
    noise /= static_cast<double>(y.size());
    CHECK(noise == doctest::Approx(1.0).epsilon(0.01));
    double gap = 0;
    for (std::size_t i = 500; i < 600; ++i) gap += std::norm(y.samples[i]);
    CHECK(gap > 0.0);
}

TEST_CASE("awgn: delivered SNR within 0.1 dB of configured") {
    Rng rng(67);
    SampleStream s{random_vec(rng, 1000000), 0};
    const double p_sig = mean_active_power(s);
    Rng noise_rng(68);
    const SampleStream y = add_awgn(s, 10.0, noise_rng);
    double noise = 0;
    for (std::size_t i = 0; i < y.size(); ++i) noise += std::norm(y.samples[i] - s.samples[i]);
    noise /= static_cast<double>(y.size());
    const double measured_db = 10.0 * std::log10(p_sig / noise);
    CHECK(measured_db == doctest::Approx(10.0).epsilon(0.01));
}

TEST_CASE("awgn on a zero stream is a degenerate input") {
    SampleStream s{ComplexVec(100, Complex(0, 0)), 0};
    Rng rng(69);
    CHECK_THROWS_AS(add_awgn(s, 5.0, rng), DegenerateInputError);
}

TEST_CASE("channel model validation") {
    ChannelModel ch;
    ch.taps = {};
    CHECK_THROWS_AS(ch.validate(), ConfigError);
    ch.taps = {Complex(0, 0), Complex(0, 0)};
    CHECK_THROWS_AS(ch.validate(), ConfigError);
    ch.taps = {Complex(0, 0), Complex(1, 0)};
    CHECK_NOTHROW(ch.validate());
    CHECK(ch.noiseless());
    ch.snr_db = 10.0;
    CHECK(!ch.noiseless());
}

TEST_CASE("apply_channel prepends the configured delay") {
    ChannelModel ch;
    ch.taps = {Complex(1, 0)};
    ch.delay = 3;
    Rng rng(70);
    SampleStream s{random_vec(rng, 10), 0};
    Rng noise_rng(1);
    const SampleStream y = apply_channel(ch, s, noise_rng);
    REQUIRE(y.size() == 13);
    for (std::size_t i = 0; i < 3; ++i) CHECK(y.samples[i] == Complex(0, 0));
    for (std::size_t i = 0; i < 10; ++i) CHECK(y.samples[i + 3] == s.samples[i]);
}
