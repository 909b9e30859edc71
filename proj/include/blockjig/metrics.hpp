#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockjig/image.hpp"
#include "blockjig/jigsaw.hpp"
#include "blockjig/permutation.hpp"

namespace blockjig {

// Single-scale SSIM configuration: Gaussian window, stabilization constants
// for an 8-bit dynamic range, BT.601 luma conversion.
struct SsimParams {
  int window_size = 11;
  double sigma = 1.5;
  double c1 = 6.5025;    // (0.01 * 255)^2
  double c2 = 58.5225;   // (0.03 * 255)^2
};

// SSIM on the luma plane, mean over all full windows at stride 1.
// Symmetric and deterministic to the last bit for fixed inputs.
double ssim(const Image& a, const Image& b, const SsimParams& params = {});

// Fraction of indices where the two permutations agree.
double placement_accuracy(const Permutation& recovered, const Permutation& truth);

// Fraction of board cells holding the same piece.
double direct_assembly_accuracy(const Assembly& a, const Assembly& truth);

}  // namespace blockjig
