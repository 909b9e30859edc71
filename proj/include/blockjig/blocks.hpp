#pragma once

#include <array>
#include <vector>

#include "blockjig/image.hpp"

namespace blockjig {

// Block grid induced by a square block size M over an image. Pixels beyond
// the last full block column/row belong to no block and are dropped by
// split_blocks.
struct BlockGeometry {
  int block_size = 0;      // M, even, >= 2
  int cols = 0;            // floor(width / M)
  int rows = 0;            // floor(height / M)
  int block_count = 0;     // cols * rows
  int subblock_count = 0;  // 4 * block_count
  int half = 0;            // M / 2

  static BlockGeometry from(int width, int height, int block_size);
};

enum class Quadrant { UpperLeft = 0, UpperRight = 1, LowerLeft = 2, LowerRight = 3 };

struct SubBlockIndex {
  int block = 0;
  Quadrant quadrant = Quadrant::UpperLeft;
};

// Blocks in raster order (left to right, top to bottom).
std::vector<Image> split_blocks(const Image& img, const BlockGeometry& geom);

// Inverse of split_blocks when the block size divides both dimensions; the
// output is (cols*M) x (rows*M).
Image merge_blocks(const std::vector<Image>& blocks, const BlockGeometry& geom);

// The four (M/2)x(M/2) quadrants of an even-sized block: UL, UR, LL, LR.
std::array<Image, 4> split_subblocks(const Image& block);
Image merge_subblocks(const std::array<Image, 4>& quadrants);

}  // namespace blockjig
