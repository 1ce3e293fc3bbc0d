#pragma once

#include <filesystem>

#include "evb/types.hpp"

namespace evb {

// "CFLD1" binary field dump:
//   8-byte magic "CFLD1\0\0\0", little-endian u32 nx, u32 ny, f64 pitch,
//   f64 origin_x, f64 origin_y, u8 plane_tag, then nx*ny (re, im) f64 pairs
//   with x running fastest (scanlines of constant y).
void write_cfld(const std::filesystem::path& path, const ComplexField& f);

/// Throws std::runtime_error on wrong magic or a truncated/garbled file.
ComplexField read_cfld(const std::filesystem::path& path);

}  // namespace evb
