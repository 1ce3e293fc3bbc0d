#include "evb/field_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace evb {

namespace {

constexpr std::array<char, 8> kMagic = {'C', 'F', 'L', 'D', '1', 0, 0, 0};

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms unsupported");

template <typename T>
void put_le(std::ostream& os, T v) {
  auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
  if constexpr (std::endian::native == std::endian::big)
    std::reverse(bytes.begin(), bytes.end());
  os.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

template <typename T>
T get_le(std::istream& is) {
  std::array<unsigned char, sizeof(T)> bytes;
  is.read(reinterpret_cast<char*>(bytes.data()), bytes.size());
  if (!is) throw std::runtime_error("cfld: truncated file");
  if constexpr (std::endian::native == std::endian::big)
    std::reverse(bytes.begin(), bytes.end());
  return std::bit_cast<T>(bytes);
}

}  // namespace

void write_cfld(const std::filesystem::path& path, const ComplexField& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cfld: cannot open " + path.string());
  os.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.nx));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid.ny));
  put_le<double>(os, f.grid.pitch);
  put_le<double>(os, f.grid.origin.x());
  put_le<double>(os, f.grid.origin.y());
  os.put(static_cast<char>(static_cast<std::uint8_t>(f.plane)));
  // values(ix, iy) is column-major with ix contiguous, which is exactly the
  // wire order (x fastest), so stream the buffer in memory order.
  const Complex* p = f.values.data();
  for (Eigen::Index i = 0; i < f.values.size(); ++i) {
    put_le<double>(os, p[i].real());
    put_le<double>(os, p[i].imag());
  }
  if (!os) throw std::runtime_error("cfld: write failed for " + path.string());
}

ComplexField read_cfld(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cfld: cannot open " + path.string());
  std::array<char, 8> magic{};
  is.read(magic.data(), magic.size());
  if (!is || magic != kMagic)
    throw std::runtime_error("cfld: wrong magic in " + path.string());
  ComplexField f;
  const auto nx = get_le<std::uint32_t>(is);
  const auto ny = get_le<std::uint32_t>(is);
  f.grid.nx = static_cast<int>(nx);
  f.grid.ny = static_cast<int>(ny);
  f.grid.pitch = get_le<double>(is);
  f.grid.origin.x() = get_le<double>(is);
  f.grid.origin.y() = get_le<double>(is);
  const int tag = is.get();
  if (tag < 0) throw std::runtime_error("cfld: truncated file");
  if (tag > 2) throw std::runtime_error("cfld: unknown plane tag");
  f.plane = static_cast<PlaneTag>(tag);
  if (f.grid.nx < 2 || f.grid.ny < 2 || !(f.grid.pitch > 0))
    throw std::runtime_error("cfld: invalid grid header");
  f.values.resize(f.grid.nx, f.grid.ny);
  Complex* p = f.values.data();
  for (Eigen::Index i = 0; i < f.values.size(); ++i) {
    const double re = get_le<double>(is);
    const double im = get_le<double>(is);
    p[i] = Complex(re, im);
  }
  return f;
}

}  // namespace evb
