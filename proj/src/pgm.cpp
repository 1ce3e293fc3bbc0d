#include "evb/pgm.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace evb {

namespace {

[[noreturn]] void fail(const std::string& why) {
  throw std::runtime_error("malformed PGM: " + why);
}

// Reads the next whitespace-delimited header token, collecting '#' comments.
std::string next_token(std::istream& is, std::vector<std::string>* comments) {
  int c = is.get();
  while (c != EOF) {
    if (c == '#') {
      std::string line;
      std::getline(is, line);
      if (comments) comments->push_back(line.empty() ? line : (line[0] == ' ' ? line.substr(1) : line));
      c = is.get();
      continue;
    }
    if (!std::isspace(c)) break;
    c = is.get();
  }
  if (c == EOF) fail("unexpected end of header");
  std::string tok;
  while (c != EOF && !std::isspace(c)) {
    tok.push_back(static_cast<char>(c));
    c = is.get();
  }
  if (c != EOF) is.unget();
  return tok;
}

int parse_int(const std::string& tok, const char* what) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (...) {
    fail(std::string("bad ") + what);
  }
  if (pos != tok.size() || v < 0) fail(std::string("bad ") + what);
  return v;
}

}  // namespace

Pgm16 read_pgm16(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail("cannot open " + path.string());
  Pgm16 img;
  if (next_token(is, &img.comments) != "P5") fail("not a binary P5 file");
  img.width = parse_int(next_token(is, &img.comments), "width");
  img.height = parse_int(next_token(is, &img.comments), "height");
  const int maxval = parse_int(next_token(is, &img.comments), "maxval");
  if (maxval != 65535) fail("maxval must be 65535");
  if (img.width < 1 || img.height < 1) fail("empty image");
  // Exactly one whitespace byte separates the header from the raster.
  const int sep = is.get();
  if (sep == EOF || !std::isspace(sep)) fail("missing raster separator");

  const size_t n = static_cast<size_t>(img.width) * img.height;
  img.pixels.resize(n);
  std::vector<unsigned char> raw(n * 2);
  is.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<size_t>(is.gcount()) != raw.size()) fail("truncated raster");
  for (size_t i = 0; i < n; ++i)
    img.pixels[i] = static_cast<std::uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1]);
  return img;
}

void write_pgm16(const std::filesystem::path& path, const Pgm16& img) {
  if (img.width < 1 || img.height < 1 ||
      img.pixels.size() != static_cast<size_t>(img.width) * img.height)
    throw std::runtime_error("pgm: inconsistent image dimensions");
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("pgm: cannot open " + path.string());
  os << "P5\n";
  for (const auto& c : img.comments) os << "# " << c << "\n";
  os << img.width << " " << img.height << "\n65535\n";
  std::vector<unsigned char> raw(img.pixels.size() * 2);
  for (size_t i = 0; i < img.pixels.size(); ++i) {
    raw[2 * i] = static_cast<unsigned char>(img.pixels[i] >> 8);
    raw[2 * i + 1] = static_cast<unsigned char>(img.pixels[i] & 0xff);
  }
  os.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!os) throw std::runtime_error("pgm: write failed for " + path.string());
}

}  // namespace evb
