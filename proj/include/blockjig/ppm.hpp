#pragma once

#include <iosfwd>
#include <string>

#include "blockjig/image.hpp"

namespace blockjig {

// Binary PPM (P6, maxval 255), the bit-exact interchange format of the
// tools. Other PNM types are rejected.
Image read_ppm(std::istream& in);
Image read_ppm_file(const std::string& path);
void write_ppm(std::ostream& out, const Image& img);
void write_ppm_file(const std::string& path, const Image& img);

}  // namespace blockjig
