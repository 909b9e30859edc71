#include "blockjig/ppm.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace blockjig {

namespace {

// Skips whitespace and '#' comments, then reads one unsigned decimal token.
long read_header_number(std::istream& in, const char* what) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') {
        c = in.get();
      }
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  if (c == EOF || !std::isdigit(c)) {
    throw FormatError(std::string("malformed PPM header: expected ") + what);
  }
  long value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > 1'000'000'000) {
      throw FormatError(std::string("PPM header value out of range for ") + what);
    }
    c = in.get();
  }
  if (c != EOF) {
    in.unget();
  }
  return value;
}

}  // namespace

Image read_ppm(std::istream& in) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (in.gcount() != 2 || magic[0] != 'P') {
    throw FormatError("not a PNM file");
  }
  if (magic[1] != '6') {
    throw FormatError(std::string("unsupported PNM type P") + magic[1] +
                      " (only binary P6 is supported)");
  }
  const long width = read_header_number(in, "width");
  const long height = read_header_number(in, "height");
  const long maxval = read_header_number(in, "maxval");
  if (width < 1 || height < 1) {
    throw FormatError("PPM dimensions must be at least 1x1");
  }
  if (maxval != 255) {
    throw FormatError("unsupported PPM maxval " + std::to_string(maxval) + " (must be 255)");
  }
  const int sep = in.get();
  if (sep == EOF || !std::isspace(sep)) {
    throw FormatError("malformed PPM header: missing separator before pixel data");
  }
  Image img(static_cast<int>(width), static_cast<int>(height));
  in.read(reinterpret_cast<char*>(img.samples.data()),
          static_cast<std::streamsize>(img.samples.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.samples.size())) {
    throw FormatError("PPM pixel data is truncated: expected " +
                      std::to_string(img.samples.size()) + " bytes, got " +
                      std::to_string(in.gcount()));
  }
  return img;
}

Image read_ppm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open " + path);
  }
  return read_ppm(in);
}

void write_ppm(std::ostream& out, const Image& img) {
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.samples.data()),
            static_cast<std::streamsize>(img.samples.size()));
}

void write_ppm_file(const std::string& path, const Image& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FormatError("cannot open " + path + " for writing");
  }
  write_ppm(out, img);
  if (!out) {
    throw FormatError("failed to write " + path);
  }
}

}  // namespace blockjig
