#include "blockjig/cifar.hpp"

#include <fstream>

namespace blockjig {

std::vector<LabeledImage> read_cifar10(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) {
    throw FormatError("cannot open " + path);
  }
  const auto file_size = static_cast<std::uint64_t>(in.tellg());
  if (file_size == 0 || file_size % kCifarRecordBytes != 0) {
    const std::uint64_t whole = file_size / kCifarRecordBytes * kCifarRecordBytes;
    throw FormatError(path + ": length " + std::to_string(file_size) +
                      " is not a positive multiple of " + std::to_string(kCifarRecordBytes) +
                      "; record boundary violated at byte offset " + std::to_string(whole));
  }
  in.seekg(0);

  const std::size_t count = file_size / kCifarRecordBytes;
  std::vector<LabeledImage> out;
  out.reserve(count);
  std::vector<std::uint8_t> record(kCifarRecordBytes);
  for (std::size_t r = 0; r < count; ++r) {
    in.read(reinterpret_cast<char*>(record.data()), static_cast<std::streamsize>(record.size()));
    if (in.gcount() != static_cast<std::streamsize>(record.size())) {
      throw FormatError(path + ": short read at record " + std::to_string(r));
    }
    LabeledImage li;
    li.label = record[0];
    li.image = Image(kCifarSide, kCifarSide);
    const std::size_t plane = static_cast<std::size_t>(kCifarSide) * kCifarSide;
    for (int y = 0; y < kCifarSide; ++y) {
      for (int x = 0; x < kCifarSide; ++x) {
        const std::size_t p = static_cast<std::size_t>(y) * kCifarSide + x;
        for (int c = 0; c < kChannels; ++c) {
          li.image.at(x, y, c) = record[1 + static_cast<std::size_t>(c) * plane + p];
        }
      }
    }
    out.push_back(std::move(li));
  }
  return out;
}

}  // namespace blockjig
