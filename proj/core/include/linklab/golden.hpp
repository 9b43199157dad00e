#pragma once

#include <string>

#include "linklab/types.hpp"

namespace linklab {

/// Binary complex-vector files used for committed golden fixtures.
/// Layout (little-endian throughout): 8-byte magic "LINKCV01",
/// uint64 element count, then count pairs of float64 (re, im).
/// See docs/frame-format.md.

void write_cvec(const std::string& path, const ComplexVec& v);

/// Throws IoError on missing file, bad magic, or truncated payload.
ComplexVec read_cvec(const std::string& path);

}  // namespace linklab
