#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockjig/image.hpp"
#include "blockjig/permutation.hpp"

namespace blockjig {

// Cross-sub-block adjacency costs, aggregated by exact integer sums over all
// blocks and channels of one attacked image.
//
//   f_w(p1, p2): cost that position p1 holds a right-column pixel and p2 the
//                left-column pixel of the same row (left/right sub-block
//                boundary statistics).
//   f_h(p3, p4): cost that position p3 holds a bottom-row pixel and p4 the
//                top-row pixel of the same column (upper/lower boundary).
//
// Positions index the shuffled (M/2)x(M/2) sub-block in row-major order.
struct AdjacencyTables {
  int half = 0;
  std::vector<std::int64_t> fw;  // half^2 x half^2
  std::vector<std::int64_t> fh;

  std::int64_t f_w(int p1, int p2) const {
    return fw[static_cast<std::size_t>(p1) * half * half + p2];
  }
  std::int64_t f_h(int p3, int p4) const {
    return fh[static_cast<std::size_t>(p3) * half * half + p4];
  }
};

// Pairwise co-occurrence cost between two positions across all sub-blocks
// and channels. The sum carries no orientation, so the cost of "q right of
// p" and "q below p" coincide; one symmetric matrix backs both readings.
struct WithinTables {
  int half = 0;
  std::vector<std::int64_t> cost;  // symmetric, zero diagonal

  std::int64_t horizontal(int p, int q) const {
    return cost[static_cast<std::size_t>(p) * half * half + q];
  }
  std::int64_t vertical(int p, int q) const { return horizontal(p, q); }
};

// Shuffled positions recovered for the four corners of the restored
// sub-block layout.
struct CornerAssignment {
  int ul = 0;
  int ur = 0;
  int ll = 0;
  int lr = 0;
  std::int64_t objective = 0;
  int tie_events = 0;  // number of equally optimal tuples beyond the first
};

struct HorizontalEdgePair {
  int right_pos = 0;  // column M/2 of some row
  int left_pos = 0;   // column 1 of the same row
};

struct VerticalEdgePair {
  int bottom_pos = 0;  // row M/2 of some column
  int top_pos = 0;     // row 1 of the same column
};

struct EdgePairing {
  std::vector<HorizontalEdgePair> horizontal;  // exactly M/2 - 2 pairs
  std::vector<VerticalEdgePair> vertical;
  int tie_events = 0;
};

// Map from restored coordinates to shuffled positions. positions[y*h + x]
// is the shuffled position whose pixel belongs at restored (x, y); -1 while
// unassigned. Injective at all times; a bijection once complete.
struct SubBlockPlacement {
  int half = 0;
  std::vector<int> positions;
  int tie_events = 0;
  // Rows/columns where an independently chained far edge disagrees with the
  // partner inherited from the near-edge chain (diagnostic only).
  int chain_disagreements = 0;

  bool complete() const;
  Permutation to_permutation() const;  // throws if incomplete
};

// Eq-style cross tables summed over all blocks of the image. Requires the
// block size to divide both image dimensions.
AdjacencyTables build_cross_tables(const Image& img, int block_size);
WithinTables build_within_tables(const Image& img, int block_size);

// Exhaustive search over all ordered distinct 4-tuples for the corner
// objective f_w(lr,ll) + f_h(lr,ur) + f_w(ur,ul) + f_h(ll,ul); ties break
// toward the lexicographically smallest tuple.
CornerAssignment solve_corners(const AdjacencyTables& tables);

// Greedy minimum-cost pairing without replacement: M/2 - 2 horizontal pairs
// from f_w, then M/2 - 2 vertical pairs from f_h, never reusing corners or
// earlier picks. Ties break toward the smallest (first, second) index pair.
EdgePairing pair_edges(const AdjacencyTables& tables, const CornerAssignment& corners);

// Anchors the corners, orders each edge by greedy chaining with the within
// tables, and fills the interior in raster order by the left+up neighbor
// cost. Always produces a complete bijection.
SubBlockPlacement order_and_fill(const WithinTables& tables, const CornerAssignment& corners,
                                 const EdgePairing& pairs);

// Full stage-1 pipeline on one encrypted image.
SubBlockPlacement recover_placement(const Image& img, int block_size);

// Applies the placement identically to every quadrant of every block:
// out(x, y) = in(placement(x, y)) within each sub-block. Block positions are
// untouched.
Image restore_subblocks(const Image& img, const SubBlockPlacement& placement, int block_size);

// One "x,y -> p" line per restored coordinate plus summary statistics;
// coordinates are 1-based, positions 0-based row-major.
std::string placement_report(const SubBlockPlacement& placement,
                             const AdjacencyTables* tables = nullptr);

}  // namespace blockjig
