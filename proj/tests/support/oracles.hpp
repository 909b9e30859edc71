#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "blockjig/image.hpp"
#include "blockjig/jigsaw.hpp"
#include "blockjig/unshuffle.hpp"

// Brute-force reference implementations kept independent of the library's
// optimized paths. Everything here recomputes from first principles.
namespace blockjig::testsupport {

// Literal translation of the cross-table definitions: iterate coordinates,
// re-read pixels straight from the image for every term.
inline AdjacencyTables naive_cross_tables(const Image& img, int block_size) {
  const int h = block_size / 2;
  const int s = h * h;
  const int cols = img.width / block_size;
  const int rows = img.height / block_size;
  AdjacencyTables t;
  t.half = h;
  t.fw.assign(static_cast<std::size_t>(s) * s, 0);
  t.fh.assign(static_cast<std::size_t>(s) * s, 0);

  auto sample = [&](int block, int quad, int pos, int c) -> std::int64_t {
    const int bx = block % cols;
    const int by = block / cols;
    const int x = bx * block_size + (quad % 2) * h + pos % h;
    const int y = by * block_size + (quad / 2) * h + pos / h;
    return img.at(x, y, c);
  };

  for (int p1 = 0; p1 < s; ++p1) {
    for (int p2 = 0; p2 < s; ++p2) {
      std::int64_t fw = 0;
      std::int64_t fh = 0;
      for (int c = 0; c < 3; ++c) {
        for (int i = 0; i < cols * rows; ++i) {
          const std::int64_t dw1 = sample(i, 0, p1, c) - sample(i, 1, p2, c);
          const std::int64_t dw2 = sample(i, 2, p1, c) - sample(i, 3, p2, c);
          fw += dw1 * dw1 + dw2 * dw2;
          const std::int64_t dh1 = sample(i, 0, p1, c) - sample(i, 2, p2, c);
          const std::int64_t dh2 = sample(i, 1, p1, c) - sample(i, 3, p2, c);
          fh += dh1 * dh1 + dh2 * dh2;
        }
      }
      t.fw[static_cast<std::size_t>(p1) * s + p2] = fw;
      t.fh[static_cast<std::size_t>(p1) * s + p2] = fh;
    }
  }
  return t;
}

// Corner objective evaluated directly from the tables.
inline std::int64_t corner_objective(const AdjacencyTables& t, int lr, int ll, int ur, int ul) {
  return t.f_w(lr, ll) + t.f_h(lr, ur) + t.f_w(ur, ul) + t.f_h(ll, ul);
}

struct CornerOracleResult {
  int ul = 0, ur = 0, ll = 0, lr = 0;
  std::int64_t objective = 0;
  int optima = 0;  // number of tuples achieving the optimum
};

// Enumerates every ordered tuple of four distinct positions. For h = 2 this
// is exactly the search over all 24 bijections of a complete placement.
inline CornerOracleResult exhaustive_corner_search(const AdjacencyTables& t) {
  const int s = t.half * t.half;
  CornerOracleResult best;
  std::int64_t best_obj = std::numeric_limits<std::int64_t>::max();
  int optima = 0;
  for (int lr = 0; lr < s; ++lr) {
    for (int ll = 0; ll < s; ++ll) {
      if (ll == lr) continue;
      for (int ur = 0; ur < s; ++ur) {
        if (ur == lr || ur == ll) continue;
        for (int ul = 0; ul < s; ++ul) {
          if (ul == lr || ul == ll || ul == ur) continue;
          const std::int64_t obj = corner_objective(t, lr, ll, ur, ul);
          if (obj < best_obj) {
            best_obj = obj;
            best = {ul, ur, ll, lr, obj, 0};
            optima = 1;
          } else if (obj == best_obj) {
            ++optima;
          }
        }
      }
    }
  }
  best.objective = best_obj;
  best.optima = optima;
  return best;
}

struct AssemblyOracleResult {
  Assembly assembly;
  double cost = 0.0;
  int optima = 0;
};

// Tries every assignment of pieces to cells; boards up to 3x2 only.
inline AssemblyOracleResult exhaustive_best_assembly(const PieceSet& pieces,
                                                     const CompatibilityTable& table) {
  const int n = pieces.count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  AssemblyOracleResult best;
  best.cost = std::numeric_limits<double>::infinity();
  do {
    Assembly a;
    a.cols = pieces.cols;
    a.rows = pieces.rows;
    a.cells = perm;
    const double cost = assembly_cost(a, table);
    if (cost < best.cost) {
      best.cost = cost;
      best.assembly = a;
      best.optima = 1;
    } else if (cost == best.cost) {
      ++best.optima;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Moves the pixel at sub-block position q to position sigma[q] in every
// quadrant of every block (the scatter orientation, written out directly).
inline Image scatter_subblock_pixels(const Image& img, int block_size, const Permutation& sigma) {
  const int h = block_size / 2;
  const int cols = img.width / block_size;
  const int rows = img.height / block_size;
  Image out(img.width, img.height);
  for (int by = 0; by < rows; ++by) {
    for (int bx = 0; bx < cols; ++bx) {
      for (int quad = 0; quad < 4; ++quad) {
        const int ox = bx * block_size + (quad % 2) * h;
        const int oy = by * block_size + (quad / 2) * h;
        for (int q = 0; q < h * h; ++q) {
          const int d = static_cast<int>(sigma[static_cast<std::size_t>(q)]);
          for (int c = 0; c < kChannels; ++c) {
            out.at(ox + d % h, oy + d / h, c) = img.at(ox + q % h, oy + q / h, c);
          }
        }
      }
    }
  }
  return out;
}

// Per-channel intensity histogram.
inline std::array<std::array<std::int64_t, 256>, 3> channel_histogram(const Image& img) {
  std::array<std::array<std::int64_t, 256>, 3> hist{};
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      for (int c = 0; c < kChannels; ++c) {
        ++hist[static_cast<std::size_t>(c)][img.at(x, y, c)];
      }
    }
  }
  return hist;
}

}  // namespace blockjig::testsupport
