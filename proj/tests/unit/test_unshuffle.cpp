#include "blockjig/unshuffle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "blockjig/cipher.hpp"
#include "doctest.h"
#include "support/oracles.hpp"
#include "support/synthetic.hpp"

using namespace blockjig;
using testsupport::exhaustive_corner_search;
using testsupport::naive_cross_tables;
using testsupport::noise_image;
using testsupport::scatter_subblock_pixels;
using testsupport::smooth_scene;

namespace {

SubBlockPlacement placement_from(const Permutation& p, int half) {
  SubBlockPlacement pl;
  pl.half = half;
  pl.positions.assign(p.mapping().begin(), p.mapping().end());
  return pl;
}

// The cipher's pixel shuffle with an explicit permutation and no block
// scramble: out(r) = in(pi[r]) inside every quadrant.
Image shuffle_pixels(const Image& img, const Permutation& pi, int block_size) {
  return restore_subblocks(img, placement_from(pi, block_size / 2), block_size);
}

}  // namespace

TEST_CASE("hand-built two-block image yields constant cross entries") {
  Image img(32, 16);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 32; ++x) {
      const bool upper = y < 8;
      const bool left_half = (x % 16) < 8;
      std::uint8_t v = 0;
      if (upper) {
        v = left_half ? 10 : 12;
      }
      for (int c = 0; c < kChannels; ++c) img.at(x, y, c) = v;
    }
  }
  const AdjacencyTables t = build_cross_tables(img, 16);
  for (int p1 = 0; p1 < 64; ++p1) {
    for (int p2 = 0; p2 < 64; ++p2) {
      REQUIRE(t.f_w(p1, p2) == 24);     // (10-12)^2 * 3 channels * 2 blocks
      REQUIRE(t.f_h(p1, p2) == 1464);   // ((10-0)^2 + (12-0)^2) * 3 * 2
    }
  }
}

TEST_CASE("constant images produce all-zero tables") {
  Image img(32, 32);
  for (auto& s : img.samples) s = 99;
  const AdjacencyTables t = build_cross_tables(img, 8);
  for (std::int64_t v : t.fw) REQUIRE(v == 0);
  for (std::int64_t v : t.fh) REQUIRE(v == 0);
  const WithinTables w = build_within_tables(img, 8);
  for (std::int64_t v : w.cost) REQUIRE(v == 0);
}

TEST_CASE("optimized cross tables match the quadruple-loop oracle") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Image img = noise_image(seed + 31, 32, 32);
    const AdjacencyTables fast = build_cross_tables(img, 8);
    const AdjacencyTables slow = naive_cross_tables(img, 8);
    REQUIRE(fast.fw == slow.fw);
    REQUIRE(fast.fh == slow.fh);
  }
}

TEST_CASE("within tables are symmetric with zero diagonal") {
  const Image img = noise_image(77, 32, 32);
  const WithinTables w = build_within_tables(img, 8);
  const int s = w.half * w.half;
  for (int p = 0; p < s; ++p) {
    REQUIRE(w.horizontal(p, p) == 0);
    for (int q = 0; q < s; ++q) {
      REQUIRE(w.horizontal(p, q) == w.horizontal(q, p));
      REQUIRE(w.horizontal(p, q) == w.vertical(p, q));
    }
  }
}

TEST_CASE("corners of an unshuffled smooth image are the true corners (h=2)") {
  const Image img = smooth_scene(12, 32, 32);
  const AdjacencyTables t = build_cross_tables(img, 4);
  const CornerAssignment corners = solve_corners(t);
  // row-major positions of a 2x2 sub-block: (1,1)=0, (2,1)=1, (1,2)=2, (2,2)=3
  CHECK(corners.ul == 0);
  CHECK(corners.ur == 1);
  CHECK(corners.ll == 2);
  CHECK(corners.lr == 3);

  const auto oracle = exhaustive_corner_search(t);
  CHECK(corners.objective == oracle.objective);
  CHECK(oracle.optima == 1);
  CHECK(corners.tie_events == 0);
}

TEST_CASE("returned corner objective is minimal over full enumeration (h<=4)") {
  for (std::uint64_t seed : {1ull, 2ull}) {
    const Image img = smooth_scene(seed, 48, 48);
    for (int m : {4, 8}) {
      const AdjacencyTables t = build_cross_tables(img, m);
      const CornerAssignment corners = solve_corners(t);
      const auto oracle = exhaustive_corner_search(t);
      REQUIRE(corners.objective == oracle.objective);
      REQUIRE(testsupport::corner_objective(t, corners.lr, corners.ll, corners.ur,
                                            corners.ul) == corners.objective);
    }
  }
}

TEST_CASE("corner search needs at least four positions") {
  const Image img = noise_image(5, 16, 16);
  const AdjacencyTables t = build_cross_tables(img, 2);  // h=1
  CHECK_THROWS_AS(solve_corners(t), AttackError);
}

TEST_CASE("corners are equivariant under a known shuffle") {
  const Image img = smooth_scene(14, 48, 48);
  const AdjacencyTables base = build_cross_tables(img, 8);
  const CornerAssignment c0 = solve_corners(base);
  REQUIRE(c0.tie_events == 0);

  const Permutation sigma = make_permutation(99, 16);
  const Image shuffled = scatter_subblock_pixels(img, 8, sigma);
  const AdjacencyTables moved = build_cross_tables(shuffled, 8);

  // F^sigma[sigma p1][sigma p2] == F[p1][p2]
  const int s = 16;
  for (int p1 = 0; p1 < s; ++p1) {
    for (int p2 = 0; p2 < s; ++p2) {
      REQUIRE(moved.f_w(static_cast<int>(sigma[p1]), static_cast<int>(sigma[p2])) ==
              base.f_w(p1, p2));
      REQUIRE(moved.f_h(static_cast<int>(sigma[p1]), static_cast<int>(sigma[p2])) ==
              base.f_h(p1, p2));
    }
  }

  const CornerAssignment c1 = solve_corners(moved);
  CHECK(c1.ul == static_cast<int>(sigma[static_cast<std::size_t>(c0.ul)]));
  CHECK(c1.ur == static_cast<int>(sigma[static_cast<std::size_t>(c0.ur)]));
  CHECK(c1.ll == static_cast<int>(sigma[static_cast<std::size_t>(c0.ll)]));
  CHECK(c1.lr == static_cast<int>(sigma[static_cast<std::size_t>(c0.lr)]));
}

TEST_CASE("single horizontal pair of an unshuffled smooth image (h=3)") {
  const Image img = smooth_scene(16, 36, 36);
  const AdjacencyTables t = build_cross_tables(img, 6);
  const CornerAssignment corners = solve_corners(t);
  // true corners in a 3x3 layout
  REQUIRE(corners.ul == 0);
  REQUIRE(corners.ur == 2);
  REQUIRE(corners.ll == 6);
  REQUIRE(corners.lr == 8);
  const EdgePairing pairs = pair_edges(t, corners);
  REQUIRE(pairs.horizontal.size() == 1);
  REQUIRE(pairs.vertical.size() == 1);
  // coordinates (3,2) and (1,2): middle of the right and left columns
  CHECK(pairs.horizontal[0].right_pos == 5);
  CHECK(pairs.horizontal[0].left_pos == 3);
  CHECK(pairs.vertical[0].bottom_pos == 7);
  CHECK(pairs.vertical[0].top_pos == 1);
}

TEST_CASE("degenerate constant image still pairs all edges, by tie break") {
  Image img(24, 24);
  for (auto& s : img.samples) s = 50;
  const AdjacencyTables t = build_cross_tables(img, 6);
  const CornerAssignment corners = solve_corners(t);
  CHECK(corners.tie_events > 0);
  const EdgePairing pairs = pair_edges(t, corners);
  CHECK(pairs.horizontal.size() == 1);
  CHECK(pairs.vertical.size() == 1);
  CHECK(pairs.tie_events > 0);
}

TEST_CASE("edge pair positions never collide with the corners or each other") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Image img = noise_image(seed + 200, 32, 32);
    const AdjacencyTables t = build_cross_tables(img, 8);
    const CornerAssignment corners = solve_corners(t);
    const EdgePairing pairs = pair_edges(t, corners);
    std::vector<int> seen{corners.ul, corners.ur, corners.ll, corners.lr};
    for (const auto& p : pairs.horizontal) {
      seen.push_back(p.right_pos);
      seen.push_back(p.left_pos);
    }
    for (const auto& p : pairs.vertical) {
      seen.push_back(p.bottom_pos);
      seen.push_back(p.top_pos);
    }
    std::sort(seen.begin(), seen.end());
    REQUIRE(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}

TEST_CASE("h=2 placement is complete with corners alone") {
  const Image img = smooth_scene(18, 32, 32);
  const SubBlockPlacement placement = recover_placement(img, 4);
  REQUIRE(placement.complete());
  CHECK(placement.positions.size() == 4);
}

TEST_CASE("identity shuffle recovers the identity placement (h=8)") {
  const Image img = smooth_scene(20, 224, 224);
  const SubBlockPlacement placement = recover_placement(img, 16);
  REQUIRE(placement.complete());
  CHECK(placement.to_permutation().is_identity());
}

TEST_CASE("known shuffle recovers the inverse placement (h=8)") {
  const Image img = smooth_scene(22, 224, 224);
  const Permutation pi = make_permutation(4242, 64);
  const Image shuffled = shuffle_pixels(img, pi, 16);
  const SubBlockPlacement placement = recover_placement(shuffled, 16);
  REQUIRE(placement.complete());
  CHECK(placement.to_permutation() == invert(pi));
}

TEST_CASE("placement recovery always yields a bijection") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Image img = noise_image(seed + 400, 48, 48);
    const SubBlockPlacement placement = recover_placement(img, 8);
    REQUIRE(placement.complete());
    CHECK_NOTHROW(placement.to_permutation());
  }
}

TEST_CASE("restore applies the placement and rejects incomplete input") {
  const Image img = smooth_scene(24, 32, 32);
  const Permutation pi = make_permutation(7, 16);
  CHECK(shuffle_pixels(img, Permutation::identity(16), 8) == img);
  const Image shuffled = shuffle_pixels(img, pi, 8);
  CHECK(shuffle_pixels(shuffled, invert(pi), 8) == img);

  SubBlockPlacement partial;
  partial.half = 4;
  partial.positions.assign(16, -1);
  CHECK_THROWS_AS(restore_subblocks(img, partial, 8), std::invalid_argument);
}

TEST_CASE("end-to-end pixel recovery on a smooth image without block scramble") {
  const Image img = smooth_scene(26, 224, 224);
  const Permutation pi = make_permutation(31337, 64);
  const Image shuffled = shuffle_pixels(img, pi, 16);
  const SubBlockPlacement placement = recover_placement(shuffled, 16);
  REQUIRE(placement.complete());
  CHECK(restore_subblocks(shuffled, placement, 16) == img);
}

TEST_CASE("full pipeline placement equals exhaustive search for h=2") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Image base = smooth_scene(seed + 500, 32, 32);
    const Image enc = encrypt(base, {4, {seed, seed + 1}});
    const AdjacencyTables t = build_cross_tables(enc, 4);
    const auto oracle = exhaustive_corner_search(t);
    const SubBlockPlacement placement = recover_placement(enc, 4);
    const bool same = placement.positions[0] == oracle.ul && placement.positions[1] == oracle.ur &&
                      placement.positions[2] == oracle.ll && placement.positions[3] == oracle.lr;
    const std::int64_t got =
        testsupport::corner_objective(t, placement.positions[3], placement.positions[2],
                                      placement.positions[1], placement.positions[0]);
    REQUIRE((same || got == oracle.objective));
  }
}

TEST_CASE("placement report lists one mapping per coordinate") {
  const Image img = smooth_scene(28, 32, 32);
  const AdjacencyTables t = build_cross_tables(img, 4);
  const SubBlockPlacement placement = recover_placement(img, 4);
  const std::string report = placement_report(placement, &t);
  CHECK(report.find("half=2") != std::string::npos);
  CHECK(report.find("1,1 -> 0") != std::string::npos);
  CHECK(report.find("2,2 -> 3") != std::string::npos);
  CHECK(report.find("fw_min=") != std::string::npos);
}
