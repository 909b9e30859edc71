#include "blockjig/unshuffle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "blockjig/blocks.hpp"

namespace blockjig {

namespace {

constexpr std::int64_t kNoValue = std::numeric_limits<std::int64_t>::max();

BlockGeometry exact_geometry(const Image& img, int block_size) {
  if (img.width % block_size != 0 || img.height % block_size != 0) {
    throw GeometryError("block size must divide both image dimensions");
  }
  return BlockGeometry::from(img.width, img.height, block_size);
}

// Quadrant samples of one block as flat row-major arrays, one per channel.
struct QuadrantSamples {
  // [quadrant][channel][position]
  std::array<std::array<std::vector<int>, 3>, 4> values;
};

QuadrantSamples extract_quadrants(const Image& img, const BlockGeometry& geom, int bx, int by) {
  const int h = geom.half;
  QuadrantSamples qs;
  for (int quad = 0; quad < 4; ++quad) {
    const int ox = bx * geom.block_size + (quad % 2) * h;
    const int oy = by * geom.block_size + (quad / 2) * h;
    for (int c = 0; c < kChannels; ++c) {
      auto& v = qs.values[quad][c];
      v.resize(static_cast<std::size_t>(h) * h);
      for (int p = 0; p < h * h; ++p) {
        v[p] = img.at(ox + p % h, oy + p / h, c);
      }
    }
  }
  return qs;
}

int position_index(int x, int y, int h) { return y * h + x; }

}  // namespace

bool SubBlockPlacement::complete() const {
  if (positions.size() != static_cast<std::size_t>(half) * half) {
    return false;
  }
  return std::all_of(positions.begin(), positions.end(), [](int p) { return p >= 0; });
}

Permutation SubBlockPlacement::to_permutation() const {
  if (!complete()) {
    throw std::invalid_argument("placement is incomplete");
  }
  std::vector<std::uint32_t> map(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    map[i] = static_cast<std::uint32_t>(positions[i]);
  }
  return Permutation(std::move(map));
}

AdjacencyTables build_cross_tables(const Image& img, int block_size) {
  const BlockGeometry geom = exact_geometry(img, block_size);
  const int h = geom.half;
  const int s = h * h;
  AdjacencyTables tables;
  tables.half = h;
  tables.fw.assign(static_cast<std::size_t>(s) * s, 0);
  tables.fh.assign(static_cast<std::size_t>(s) * s, 0);

  for (int by = 0; by < geom.rows; ++by) {
    for (int bx = 0; bx < geom.cols; ++bx) {
      const QuadrantSamples qs = extract_quadrants(img, geom, bx, by);
      for (int c = 0; c < kChannels; ++c) {
        const auto& ul = qs.values[0][c];
        const auto& ur = qs.values[1][c];
        const auto& ll = qs.values[2][c];
        const auto& lr = qs.values[3][c];
        for (int p1 = 0; p1 < s; ++p1) {
          std::int64_t* roww = tables.fw.data() + static_cast<std::size_t>(p1) * s;
          const int a = ul[p1];
          const int b = ll[p1];
          for (int p2 = 0; p2 < s; ++p2) {
            const int d1 = a - ur[p2];
            const int d2 = b - lr[p2];
            roww[p2] += d1 * d1 + d2 * d2;
          }
          std::int64_t* rowh = tables.fh.data() + static_cast<std::size_t>(p1) * s;
          const int e = ur[p1];
          for (int p4 = 0; p4 < s; ++p4) {
            const int d1 = a - ll[p4];
            const int d2 = e - lr[p4];
            rowh[p4] += d1 * d1 + d2 * d2;
          }
        }
      }
    }
  }
  return tables;
}

WithinTables build_within_tables(const Image& img, int block_size) {
  const BlockGeometry geom = exact_geometry(img, block_size);
  const int h = geom.half;
  const int s = h * h;
  WithinTables tables;
  tables.half = h;
  tables.cost.assign(static_cast<std::size_t>(s) * s, 0);

  for (int by = 0; by < geom.rows; ++by) {
    for (int bx = 0; bx < geom.cols; ++bx) {
      const QuadrantSamples qs = extract_quadrants(img, geom, bx, by);
      for (int quad = 0; quad < 4; ++quad) {
        for (int c = 0; c < kChannels; ++c) {
          const auto& v = qs.values[quad][c];
          for (int p = 0; p < s; ++p) {
            std::int64_t* row = tables.cost.data() + static_cast<std::size_t>(p) * s;
            const int a = v[p];
            for (int q = p + 1; q < s; ++q) {
              const int d = a - v[q];
              row[q] += d * d;
            }
          }
        }
      }
    }
  }
  for (int p = 0; p < s; ++p) {
    for (int q = p + 1; q < s; ++q) {
      tables.cost[static_cast<std::size_t>(q) * s + p] =
          tables.cost[static_cast<std::size_t>(p) * s + q];
    }
  }
  return tables;
}

CornerAssignment solve_corners(const AdjacencyTables& tables) {
  const int s = tables.half * tables.half;
  if (s < 4) {
    throw AttackError("corner search needs at least 4 sub-block positions");
  }

  CornerAssignment best;
  std::int64_t best_obj = kNoValue;
  int ties = 0;

  // p1 = lower-right, p2 = lower-left, p3 = upper-right, p4 = upper-left.
  // Partial sums are monotone, so a partial value strictly above the best
  // cannot lead to a new minimum or a tie.
  for (int p1 = 0; p1 < s; ++p1) {
    const std::int64_t* w1 = tables.fw.data() + static_cast<std::size_t>(p1) * s;
    const std::int64_t* h1 = tables.fh.data() + static_cast<std::size_t>(p1) * s;
    for (int p2 = 0; p2 < s; ++p2) {
      if (p2 == p1) continue;
      const std::int64_t s12 = w1[p2];
      if (s12 > best_obj) continue;
      const std::int64_t* h2 = tables.fh.data() + static_cast<std::size_t>(p2) * s;
      for (int p3 = 0; p3 < s; ++p3) {
        if (p3 == p1 || p3 == p2) continue;
        const std::int64_t s123 = s12 + h1[p3];
        if (s123 > best_obj) continue;
        const std::int64_t* w3 = tables.fw.data() + static_cast<std::size_t>(p3) * s;
        for (int p4 = 0; p4 < s; ++p4) {
          if (p4 == p1 || p4 == p2 || p4 == p3) continue;
          const std::int64_t obj = s123 + w3[p4] + h2[p4];
          if (obj < best_obj) {
            best_obj = obj;
            best.lr = p1;
            best.ll = p2;
            best.ur = p3;
            best.ul = p4;
            ties = 0;
          } else if (obj == best_obj) {
            ++ties;
          }
        }
      }
    }
  }

  best.objective = best_obj;
  best.tie_events = ties;
  return best;
}

EdgePairing pair_edges(const AdjacencyTables& tables, const CornerAssignment& corners) {
  const int h = tables.half;
  const int s = h * h;
  std::vector<char> used(static_cast<std::size_t>(s), 0);
  for (int c : {corners.ul, corners.ur, corners.ll, corners.lr}) {
    if (c < 0 || c >= s || used[c]) {
      throw std::invalid_argument("corner positions must be distinct and in range");
    }
    used[c] = 1;
  }

  EdgePairing pairing;
  int free = s - 4;

  auto select_pairs = [&](const std::vector<std::int64_t>& table, auto emit) {
    for (int k = 0; k < h - 2; ++k) {
      if (free < 2) {
        throw AttackError("ran out of free positions while pairing edges");
      }
      std::int64_t best = kNoValue;
      int best_a = -1;
      int best_b = -1;
      for (int a = 0; a < s; ++a) {
        if (used[a]) continue;
        const std::int64_t* row = table.data() + static_cast<std::size_t>(a) * s;
        for (int b = 0; b < s; ++b) {
          if (used[b] || b == a) continue;
          if (row[b] < best) {
            best = row[b];
            best_a = a;
            best_b = b;
          } else if (row[b] == best) {
            ++pairing.tie_events;
          }
        }
      }
      used[best_a] = 1;
      used[best_b] = 1;
      free -= 2;
      emit(best_a, best_b);
    }
  };

  select_pairs(tables.fw, [&](int a, int b) {
    pairing.horizontal.push_back({a, b});  // right, left
  });
  select_pairs(tables.fh, [&](int a, int b) {
    pairing.vertical.push_back({a, b});  // bottom, top
  });
  return pairing;
}

SubBlockPlacement order_and_fill(const WithinTables& tables, const CornerAssignment& corners,
                                 const EdgePairing& pairs) {
  const int h = tables.half;
  const int s = h * h;
  const int expected_pairs = h - 2;
  if (static_cast<int>(pairs.horizontal.size()) != expected_pairs ||
      static_cast<int>(pairs.vertical.size()) != expected_pairs) {
    throw std::invalid_argument("edge pairing does not match the sub-block size");
  }

  SubBlockPlacement placement;
  placement.half = h;
  placement.positions.assign(static_cast<std::size_t>(s), -1);
  placement.tie_events = corners.tie_events + pairs.tie_events;

  std::vector<char> used(static_cast<std::size_t>(s), 0);
  auto place = [&](int x, int y, int pos) {
    if (pos < 0 || pos >= s || used[pos]) {
      throw std::invalid_argument("placement input positions are not disjoint");
    }
    used[pos] = 1;
    placement.positions[position_index(x, y, h)] = pos;
  };

  place(0, 0, corners.ul);
  place(h - 1, 0, corners.ur);
  place(0, h - 1, corners.ll);
  place(h - 1, h - 1, corners.lr);

  // Chain one edge from the anchored corner; the opposite edge inherits the
  // partner found by pair_edges for each chained position.
  std::vector<char> taken(pairs.horizontal.size(), 0);
  int current = corners.ul;
  for (int y = 1; y < h - 1; ++y) {
    std::int64_t best = kNoValue;
    int best_k = -1;
    for (std::size_t k = 0; k < pairs.horizontal.size(); ++k) {
      if (taken[k]) continue;
      const std::int64_t cost = tables.vertical(current, pairs.horizontal[k].left_pos);
      if (cost < best || (cost == best && best_k >= 0 &&
                          pairs.horizontal[k].left_pos < pairs.horizontal[best_k].left_pos)) {
        if (cost == best) ++placement.tie_events;
        best = cost;
        best_k = static_cast<int>(k);
      } else if (cost == best) {
        ++placement.tie_events;
      }
    }
    taken[best_k] = 1;
    place(0, y, pairs.horizontal[best_k].left_pos);
    place(h - 1, y, pairs.horizontal[best_k].right_pos);
    current = pairs.horizontal[best_k].left_pos;
  }

  taken.assign(pairs.vertical.size(), 0);
  current = corners.ul;
  for (int x = 1; x < h - 1; ++x) {
    std::int64_t best = kNoValue;
    int best_k = -1;
    for (std::size_t k = 0; k < pairs.vertical.size(); ++k) {
      if (taken[k]) continue;
      const std::int64_t cost = tables.horizontal(current, pairs.vertical[k].top_pos);
      if (cost < best || (cost == best && best_k >= 0 &&
                          pairs.vertical[k].top_pos < pairs.vertical[best_k].top_pos)) {
        if (cost == best) ++placement.tie_events;
        best = cost;
        best_k = static_cast<int>(k);
      } else if (cost == best) {
        ++placement.tie_events;
      }
    }
    taken[best_k] = 1;
    place(x, 0, pairs.vertical[best_k].top_pos);
    place(x, h - 1, pairs.vertical[best_k].bottom_pos);
    current = pairs.vertical[best_k].top_pos;
  }

  // Interior in raster order; the left and up neighbors are always placed.
  for (int y = 1; y < h - 1; ++y) {
    for (int x = 1; x < h - 1; ++x) {
      const int left = placement.positions[position_index(x - 1, y, h)];
      const int up = placement.positions[position_index(x, y - 1, h)];
      std::int64_t best = kNoValue;
      int best_p = -1;
      for (int p = 0; p < s; ++p) {
        if (used[p]) continue;
        const std::int64_t cost = tables.horizontal(left, p) + tables.vertical(up, p);
        if (cost < best) {
          best = cost;
          best_p = p;
        } else if (cost == best) {
          ++placement.tie_events;
        }
      }
      place(x, y, best_p);
    }
  }

  // Diagnostic: chain the far edges independently and compare with the
  // inherited partners.
  auto chain_disagreements = [&](int anchor, auto far_pos, int count, bool vertical_axis) {
    std::vector<char> picked(static_cast<std::size_t>(count), 0);
    int cur = anchor;
    int mismatches = 0;
    for (int step = 0; step < count; ++step) {
      std::int64_t best = kNoValue;
      int best_k = -1;
      for (int k = 0; k < count; ++k) {
        if (picked[k]) continue;
        const std::int64_t cost = tables.horizontal(cur, far_pos(k));
        if (cost < best || (cost == best && best_k >= 0 && far_pos(k) < far_pos(best_k))) {
          best = cost;
          best_k = k;
        }
      }
      picked[best_k] = 1;
      cur = far_pos(best_k);
      const int placed = vertical_axis
                             ? placement.positions[position_index(h - 1, step + 1, h)]
                             : placement.positions[position_index(step + 1, h - 1, h)];
      if (placed != cur) {
        ++mismatches;
      }
    }
    return mismatches;
  };
  if (expected_pairs > 0) {
    placement.chain_disagreements +=
        chain_disagreements(corners.ur, [&](int k) { return pairs.horizontal[k].right_pos; },
                            expected_pairs, true);
    placement.chain_disagreements +=
        chain_disagreements(corners.ll, [&](int k) { return pairs.vertical[k].bottom_pos; },
                            expected_pairs, false);
  }

  return placement;
}

SubBlockPlacement recover_placement(const Image& img, int block_size) {
  const AdjacencyTables cross = build_cross_tables(img, block_size);
  const WithinTables within = build_within_tables(img, block_size);
  const CornerAssignment corners = solve_corners(cross);
  const EdgePairing pairs = pair_edges(cross, corners);
  return order_and_fill(within, corners, pairs);
}

Image restore_subblocks(const Image& img, const SubBlockPlacement& placement, int block_size) {
  if (!placement.complete()) {
    throw std::invalid_argument("placement is incomplete");
  }
  const BlockGeometry geom = exact_geometry(img, block_size);
  if (placement.half != geom.half) {
    throw GeometryError("placement size does not match the block size");
  }
  const int h = geom.half;
  Image out(img.width, img.height);
  for (int by = 0; by < geom.rows; ++by) {
    for (int bx = 0; bx < geom.cols; ++bx) {
      for (int quad = 0; quad < 4; ++quad) {
        const int ox = bx * geom.block_size + (quad % 2) * h;
        const int oy = by * geom.block_size + (quad / 2) * h;
        for (int r = 0; r < h * h; ++r) {
          const int src = placement.positions[r];
          for (int c = 0; c < kChannels; ++c) {
            out.at(ox + r % h, oy + r / h, c) = img.at(ox + src % h, oy + src / h, c);
          }
        }
      }
    }
  }
  return out;
}

std::string placement_report(const SubBlockPlacement& placement, const AdjacencyTables* tables) {
  std::ostringstream os;
  os << "half=" << placement.half << "\n";
  os << "complete=" << (placement.complete() ? 1 : 0) << "\n";
  os << "ties=" << placement.tie_events << "\n";
  os << "chain_disagreements=" << placement.chain_disagreements << "\n";
  if (tables != nullptr) {
    auto stats = [&os](const char* name, const std::vector<std::int64_t>& t) {
      std::int64_t lo = kNoValue;
      std::int64_t hi = 0;
      for (std::int64_t v : t) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      os << name << "_min=" << lo << " " << name << "_max=" << hi << "\n";
    };
    stats("fw", tables->fw);
    stats("fh", tables->fh);
  }
  for (int y = 0; y < placement.half; ++y) {
    for (int x = 0; x < placement.half; ++x) {
      os << (x + 1) << "," << (y + 1) << " -> "
         << placement.positions[position_index(x, y, placement.half)] << "\n";
    }
  }
  return os.str();
}

}  // namespace blockjig
