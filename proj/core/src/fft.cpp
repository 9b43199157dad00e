#include "linklab/fft.hpp"

#include <cmath>
#include <string>

#include "linklab/errors.hpp"

namespace linklab {
namespace {

constexpr double kPi = 3.14159265358979323846;

// In-place iterative radix-2 transform. sign = -1 forward, +1 inverse.
void transform(ComplexVec& a, int sign) {
    const std::size_t n = a.size();

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        const Complex wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

void check_length(const ComplexVec& x) {
    if (x.empty() || !is_power_of_two(x.size())) {
        throw ConfigError("fft length must be a nonzero power of two, got " +
                          std::to_string(x.size()));
    }
}

}  // namespace

ComplexVec fft(const ComplexVec& x) {
    check_length(x);
    ComplexVec out = x;
    transform(out, -1);
    return out;
}

ComplexVec ifft(const ComplexVec& x) {
    check_length(x);
    ComplexVec out = x;
    transform(out, +1);
    const double scale = 1.0 / static_cast<double>(out.size());
    for (auto& v : out) v *= scale;
    return out;
}

}  // namespace linklab
