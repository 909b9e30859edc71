#include "blockjig/blocks.hpp"

#include <string>

namespace blockjig {

namespace {

void copy_rect(const Image& src, int sx, int sy, Image& dst, int dx, int dy, int w, int h) {
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      for (int c = 0; c < kChannels; ++c) {
        dst.at(dx + x, dy + y, c) = src.at(sx + x, sy + y, c);
      }
    }
  }
}

}  // namespace

BlockGeometry BlockGeometry::from(int width, int height, int block_size) {
  if (block_size < 2 || block_size % 2 != 0) {
    throw GeometryError("block size must be even and at least 2, got " +
                        std::to_string(block_size));
  }
  if (width < block_size || height < block_size) {
    throw GeometryError("image " + std::to_string(width) + "x" + std::to_string(height) +
                        " is smaller than block size " + std::to_string(block_size));
  }
  BlockGeometry g;
  g.block_size = block_size;
  g.cols = width / block_size;
  g.rows = height / block_size;
  g.block_count = g.cols * g.rows;
  g.subblock_count = 4 * g.block_count;
  g.half = block_size / 2;
  return g;
}

std::vector<Image> split_blocks(const Image& img, const BlockGeometry& geom) {
  const int m = geom.block_size;
  if (img.width < m || img.height < m) {
    throw GeometryError("image is smaller than one block");
  }
  std::vector<Image> blocks;
  blocks.reserve(static_cast<std::size_t>(geom.block_count));
  for (int by = 0; by < geom.rows; ++by) {
    for (int bx = 0; bx < geom.cols; ++bx) {
      Image block(m, m);
      copy_rect(img, bx * m, by * m, block, 0, 0, m, m);
      blocks.push_back(std::move(block));
    }
  }
  return blocks;
}

Image merge_blocks(const std::vector<Image>& blocks, const BlockGeometry& geom) {
  const int m = geom.block_size;
  if (static_cast<int>(blocks.size()) != geom.block_count) {
    throw GeometryError("expected " + std::to_string(geom.block_count) + " blocks, got " +
                        std::to_string(blocks.size()));
  }
  for (const Image& b : blocks) {
    if (b.width != m || b.height != m) {
      throw GeometryError("all blocks must be " + std::to_string(m) + "x" + std::to_string(m));
    }
  }
  Image out(geom.cols * m, geom.rows * m);
  for (int by = 0; by < geom.rows; ++by) {
    for (int bx = 0; bx < geom.cols; ++bx) {
      const Image& block = blocks[static_cast<std::size_t>(by) * geom.cols + bx];
      copy_rect(block, 0, 0, out, bx * m, by * m, m, m);
    }
  }
  return out;
}

std::array<Image, 4> split_subblocks(const Image& block) {
  if (block.width != block.height || block.width % 2 != 0) {
    throw GeometryError("sub-block split requires a square block of even size");
  }
  const int h = block.width / 2;
  std::array<Image, 4> quads{Image(h, h), Image(h, h), Image(h, h), Image(h, h)};
  copy_rect(block, 0, 0, quads[0], 0, 0, h, h);  // UL
  copy_rect(block, h, 0, quads[1], 0, 0, h, h);  // UR
  copy_rect(block, 0, h, quads[2], 0, 0, h, h);  // LL
  copy_rect(block, h, h, quads[3], 0, 0, h, h);  // LR
  return quads;
}

Image merge_subblocks(const std::array<Image, 4>& quadrants) {
  const int h = quadrants[0].width;
  for (const Image& q : quadrants) {
    if (q.width != h || q.height != h) {
      throw GeometryError("all quadrants must be square and equally sized");
    }
  }
  Image block(2 * h, 2 * h);
  copy_rect(quadrants[0], 0, 0, block, 0, 0, h, h);
  copy_rect(quadrants[1], 0, 0, block, h, 0, h, h);
  copy_rect(quadrants[2], 0, 0, block, 0, h, h, h);
  copy_rect(quadrants[3], 0, 0, block, h, h, h, h);
  return block;
}

}  // namespace blockjig
