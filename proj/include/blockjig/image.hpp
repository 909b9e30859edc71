#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "blockjig/errors.hpp"

namespace blockjig {

inline constexpr int kChannels = 3;

// 8-bit RGB image, row-major, channel-interleaved.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> samples;

  Image() = default;

  // Zero-filled image of the given size.
  Image(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1) {
      throw GeometryError("image dimensions must be at least 1x1");
    }
    samples.assign(static_cast<std::size_t>(w) * h * kChannels, 0);
  }

  std::uint8_t at(int x, int y, int c) const {
    return samples[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
  }
  std::uint8_t& at(int x, int y, int c) {
    return samples[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
  }

  bool same_size(const Image& other) const {
    return width == other.width && height == other.height;
  }

  friend bool operator==(const Image&, const Image&) = default;
};

}  // namespace blockjig
