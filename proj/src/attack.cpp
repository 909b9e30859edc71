#include "blockjig/attack.hpp"

namespace blockjig {

namespace {

AttackOutcome solve_and_assemble(const Image& img, int block_size, const GAParams& ga,
                                 CompatibilityMetric metric) {
  AttackOutcome outcome;
  const PieceSet pieces = cut_pieces(img, block_size);
  if (pieces.count() == 1) {
    outcome.assembly = Assembly::identity(1, 1);
    outcome.restored = img;
    return outcome;
  }
  const CompatibilityTable table = build_compatibility(pieces, metric);
  outcome.assembly = ga_solve(pieces, table, ga);
  outcome.restored = assemble(pieces, outcome.assembly);
  return outcome;
}

}  // namespace

AttackOutcome conventional_attack(const Image& encrypted, int block_size, const GAParams& ga,
                                  CompatibilityMetric metric) {
  return solve_and_assemble(encrypted, block_size, ga, metric);
}

AttackOutcome proposed_attack(const Image& encrypted, int block_size, const GAParams& ga,
                              CompatibilityMetric metric) {
  SubBlockPlacement placement = recover_placement(encrypted, block_size);
  const Image unshuffled = restore_subblocks(encrypted, placement, block_size);
  AttackOutcome outcome = solve_and_assemble(unshuffled, block_size, ga, metric);
  outcome.placement = std::move(placement);
  outcome.used_subblock_restoration = true;
  return outcome;
}

}  // namespace blockjig
