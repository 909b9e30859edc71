#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockjig/image.hpp"

namespace blockjig {

inline constexpr int kCifarSide = 32;
inline constexpr std::size_t kCifarRecordBytes = 3073;  // label + 3 * 1024 planes

struct LabeledImage {
  std::uint8_t label = 0;
  Image image;
};

// Decodes a CIFAR-10 binary batch: records of one label byte followed by
// 1024 red, 1024 green and 1024 blue samples, each a row-major 32x32 plane.
// The file length must be an exact multiple of the record size.
std::vector<LabeledImage> read_cifar10(const std::string& path);

}  // namespace blockjig
