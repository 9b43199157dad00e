#pragma once

#include <cstdint>
#include <vector>

#include "linklab/types.hpp"

namespace linklab {

/// Byte sequence to bits, MSB first.
BitStream message_to_bits(const std::vector<std::uint8_t>& msg);

/// Bits back to bytes; length must be a multiple of 8.
std::vector<std::uint8_t> bits_to_message(const BitStream& bits);

/// Cyclic repetition of `bits` to exactly `length` bits.
BitStream repeat_to_length(const BitStream& bits, std::size_t length);

/// BPSK: 0 -> +1+0j, 1 -> -1+0j.
ComplexVec bpsk_map(const BitStream& bits);

/// Hard decision on the real part; re >= 0 -> 0 (ties break to 0).
BitStream bpsk_demap(const ComplexVec& symbols);

}  // namespace linklab
