#include "linklab/modem.hpp"

#include <string>

#include "linklab/errors.hpp"

namespace linklab {

BitStream message_to_bits(const std::vector<std::uint8_t>& msg) {
    BitStream bits;
    bits.reserve(msg.size() * 8);
    for (const std::uint8_t byte : msg) {
        for (int b = 7; b >= 0; --b) bits.push_back((byte >> b) & 1);
    }
    return bits;
}

std::vector<std::uint8_t> bits_to_message(const BitStream& bits) {
    if (bits.size() % 8 != 0)
        throw DimensionError("bits_to_message: length " + std::to_string(bits.size()) +
                             " is not a multiple of 8");
    std::vector<std::uint8_t> msg(bits.size() / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        msg[i / 8] = static_cast<std::uint8_t>((msg[i / 8] << 1) | (bits[i] & 1));
    }
    return msg;
}

BitStream repeat_to_length(const BitStream& bits, std::size_t length) {
    if (bits.empty()) throw DimensionError("repeat_to_length: empty bit pattern");
    BitStream out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(bits[i % bits.size()]);
    return out;
}

ComplexVec bpsk_map(const BitStream& bits) {
    ComplexVec symbols(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        symbols[i] = Complex(bits[i] ? -1.0 : 1.0, 0.0);
    return symbols;
}

BitStream bpsk_demap(const ComplexVec& symbols) {
    BitStream bits(symbols.size());
    for (std::size_t i = 0; i < symbols.size(); ++i)
        bits[i] = symbols[i].real() >= 0.0 ? 0 : 1;
    return bits;
}

}  // namespace linklab
