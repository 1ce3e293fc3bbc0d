#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace evb {

/// 16-bit grayscale image. Samples are stored row by row, top row first,
/// x fastest; on disk they are big-endian per the PGM (P5) convention.
struct Pgm16 {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> pixels;
  std::vector<std::string> comments;  // '#' header lines, without the '#'

  std::uint16_t& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
  std::uint16_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
};

/// Reads a binary P5 file with maxval 65535. Throws std::runtime_error
/// ("malformed PGM") on anything else, including truncation.
Pgm16 read_pgm16(const std::filesystem::path& path);

void write_pgm16(const std::filesystem::path& path, const Pgm16& img);

}  // namespace evb
