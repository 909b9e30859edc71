#include "blockjig/cipher.hpp"

#include <string>
#include <vector>

#include "blockjig/blocks.hpp"
#include "blockjig/permutation.hpp"

namespace blockjig {

namespace {

BlockGeometry exact_geometry(const Image& img, int block_size) {
  if (img.width % block_size != 0 || img.height % block_size != 0) {
    throw GeometryError("block size " + std::to_string(block_size) +
                        " must divide image dimensions " + std::to_string(img.width) + "x" +
                        std::to_string(img.height) + " (no cropping is performed)");
  }
  return BlockGeometry::from(img.width, img.height, block_size);
}

Image scramble(const Image& img, const BlockGeometry& geom, const Permutation& block_perm) {
  return merge_blocks(gather(block_perm, split_blocks(img, geom)), geom);
}

// Applies the same position permutation to every quadrant of every block,
// moving whole RGB triples (the shuffle is channel-agnostic).
Image shuffle_subblock_pixels(const Image& img, const BlockGeometry& geom,
                              const Permutation& pixel_perm) {
  const int h = geom.half;
  Image out(img.width, img.height);
  for (int by = 0; by < geom.rows; ++by) {
    for (int bx = 0; bx < geom.cols; ++bx) {
      for (int quad = 0; quad < 4; ++quad) {
        const int ox = bx * geom.block_size + (quad % 2) * h;
        const int oy = by * geom.block_size + (quad / 2) * h;
        for (int p = 0; p < h * h; ++p) {
          const int src = static_cast<int>(pixel_perm[static_cast<std::size_t>(p)]);
          for (int c = 0; c < kChannels; ++c) {
            out.at(ox + p % h, oy + p / h, c) = img.at(ox + src % h, oy + src / h, c);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

Image encrypt(const Image& img, const CipherParams& params) {
  const BlockGeometry geom = exact_geometry(img, params.block_size);
  const Permutation block_perm =
      make_permutation(params.keys.k1, static_cast<std::size_t>(geom.block_count));
  const Permutation pixel_perm =
      make_permutation(params.keys.k2, static_cast<std::size_t>(geom.half) * geom.half);
  return shuffle_subblock_pixels(scramble(img, geom, block_perm), geom, pixel_perm);
}

Image decrypt(const Image& img, const CipherParams& params) {
  const BlockGeometry geom = exact_geometry(img, params.block_size);
  const Permutation block_perm =
      make_permutation(params.keys.k1, static_cast<std::size_t>(geom.block_count));
  const Permutation pixel_perm =
      make_permutation(params.keys.k2, static_cast<std::size_t>(geom.half) * geom.half);
  return scramble(shuffle_subblock_pixels(img, geom, invert(pixel_perm)), geom,
                  invert(block_perm));
}

Image scramble_blocks_only(const Image& img, int block_size, std::uint64_t k1) {
  const BlockGeometry geom = exact_geometry(img, block_size);
  return scramble(img, geom,
                  make_permutation(k1, static_cast<std::size_t>(geom.block_count)));
}

}  // namespace blockjig
