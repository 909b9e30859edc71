#pragma once

#include "blockjig/image.hpp"
#include "blockjig/jigsaw.hpp"
#include "blockjig/unshuffle.hpp"

namespace blockjig {

struct AttackOutcome {
  Image restored;
  Assembly assembly;
  SubBlockPlacement placement;  // empty unless sub-block restoration ran
  bool used_subblock_restoration = false;
};

// Puzzle solver applied directly to the encrypted image.
AttackOutcome conventional_attack(const Image& encrypted, int block_size, const GAParams& ga,
                                  CompatibilityMetric metric = CompatibilityMetric::LabSsd);

// Sub-block restoration first, then the puzzle solver on the result.
AttackOutcome proposed_attack(const Image& encrypted, int block_size, const GAParams& ga,
                              CompatibilityMetric metric = CompatibilityMetric::LabSsd);

}  // namespace blockjig
