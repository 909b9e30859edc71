#pragma once

#include <cstdint>

#include "blockjig/image.hpp"

namespace blockjig {

struct KeyPair {
  std::uint64_t k1 = 0;  // block scramble seed
  std::uint64_t k2 = 0;  // sub-block pixel shuffle seed
};

struct CipherParams {
  int block_size = 16;
  KeyPair keys;
};

// Block scramble (one K1-derived permutation shared by all channels)
// followed by one K2-derived pixel-position shuffle applied identically to
// every quadrant of every block and every channel. Output dimensions equal
// input dimensions; requires the block size to divide both of them.
Image encrypt(const Image& img, const CipherParams& params);

// Exact inverse of encrypt for the same params.
Image decrypt(const Image& img, const CipherParams& params);

// Block scramble only; pixels inside blocks untouched.
Image scramble_blocks_only(const Image& img, int block_size, std::uint64_t k1);

}  // namespace blockjig
