#include "blockjig/resize.hpp"

#include <algorithm>
#include <cmath>

namespace blockjig {

namespace {

std::uint8_t round_to_byte(double v) {
  const long r = std::lround(v);
  return static_cast<std::uint8_t>(std::clamp(r, 0L, 255L));
}

}  // namespace

Image resize(const Image& img, int width, int height, ResizeMode mode) {
  if (width < 1 || height < 1) {
    throw GeometryError("resize target must be at least 1x1");
  }
  if (width == img.width && height == img.height) {
    return img;
  }
  Image out(width, height);
  const double sx = static_cast<double>(img.width) / width;
  const double sy = static_cast<double>(img.height) / height;

  if (mode == ResizeMode::Nearest) {
    for (int y = 0; y < height; ++y) {
      const int src_y = std::min(img.height - 1, static_cast<int>((y + 0.5) * sy));
      for (int x = 0; x < width; ++x) {
        const int src_x = std::min(img.width - 1, static_cast<int>((x + 0.5) * sx));
        for (int c = 0; c < kChannels; ++c) {
          out.at(x, y, c) = img.at(src_x, src_y, c);
        }
      }
    }
    return out;
  }

  for (int y = 0; y < height; ++y) {
    const double fy = std::clamp((y + 0.5) * sy - 0.5, 0.0, img.height - 1.0);
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < width; ++x) {
      const double fx = std::clamp((x + 0.5) * sx - 0.5, 0.0, img.width - 1.0);
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double wx = fx - x0;
      for (int c = 0; c < kChannels; ++c) {
        const double top = img.at(x0, y0, c) * (1.0 - wx) + img.at(x1, y0, c) * wx;
        const double bottom = img.at(x0, y1, c) * (1.0 - wx) + img.at(x1, y1, c) * wx;
        out.at(x, y, c) = round_to_byte(top * (1.0 - wy) + bottom * wy);
      }
    }
  }
  return out;
}

}  // namespace blockjig
