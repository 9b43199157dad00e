#pragma once

#include "linklab/types.hpp"

namespace linklab {

/// Forward DFT, unnormalized: X[k] = sum_n x[n] * exp(-j*2*pi*k*n/N).
/// Radix-2 in-place Cooley-Tukey; length must be a power of two.
/// Throws ConfigError otherwise.
ComplexVec fft(const ComplexVec& x);

/// Inverse DFT with 1/N normalization, so ifft(fft(x)) == x.
ComplexVec ifft(const ComplexVec& x);

}  // namespace linklab
