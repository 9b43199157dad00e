#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace linklab {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

/// Sequence of {0,1} values, one bit per element.
using BitStream = std::vector<std::uint8_t>;

/// Complex baseband samples in time order. `origin` is the absolute index
/// of the first sample, so slices keep track of where they sit in the
/// original stream.
struct SampleStream {
    ComplexVec samples;
    std::int64_t origin = 0;

    std::size_t size() const { return samples.size(); }
};

inline bool is_power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
}

}  // namespace linklab
