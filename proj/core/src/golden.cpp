#include "linklab/golden.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>

#include "linklab/errors.hpp"

namespace linklab {

static_assert(std::endian::native == std::endian::little,
              "cvec I/O assumes a little-endian host");

namespace {
constexpr char kMagic[8] = {'L', 'I', 'N', 'K', 'C', 'V', '0', '1'};
}

void write_cvec(const std::string& path, const ComplexVec& v) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(kMagic, sizeof(kMagic));
    const std::uint64_t count = v.size();
    out.write(reinterpret_cast<const char*>(&count), sizeof(count));
    for (const auto& z : v) {
        const double re = z.real(), im = z.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(re));
        out.write(reinterpret_cast<const char*>(&im), sizeof(im));
    }
    if (!out) throw IoError("short write to " + path);
}

ComplexVec read_cvec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::array<char, 8> magic{};
    std::uint64_t count = 0;
    in.read(magic.data(), magic.size());
    in.read(reinterpret_cast<char*>(&count), sizeof(count));
    if (!in || std::memcmp(magic.data(), kMagic, sizeof(kMagic)) != 0)
        throw IoError(path + ": not a cvec file");
    ComplexVec v;
    v.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        double re = 0.0, im = 0.0;
        in.read(reinterpret_cast<char*>(&re), sizeof(re));
        in.read(reinterpret_cast<char*>(&im), sizeof(im));
        if (!in) throw IoError(path + ": truncated payload");
        v.emplace_back(re, im);
    }
    return v;
}

}  // namespace linklab
