#pragma once

#include "blockjig/image.hpp"

namespace blockjig {

enum class ResizeMode { Bilinear, Nearest };

// Per-channel resampling with the half-pixel center convention. Bilinear
// results are rounded half away from zero; nearest replicates exactly for
// integer scale factors.
Image resize(const Image& img, int width, int height, ResizeMode mode = ResizeMode::Bilinear);

}  // namespace blockjig
