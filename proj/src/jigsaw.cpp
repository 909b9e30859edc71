#include "blockjig/jigsaw.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "blockjig/errors.hpp"
#include "blockjig/permutation.hpp"

namespace blockjig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// --- piece borders -------------------------------------------------------

// sRGB -> CIELAB (D65). The solver compares borders in Lab because equal
// numeric distance is closer to equal perceptual distance there.
std::array<double, 3> rgb_to_lab(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
  static const std::array<double, 256> linear = [] {
    std::array<double, 256> t{};
    for (int i = 0; i < 256; ++i) {
      const double c = i / 255.0;
      t[i] = c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
    }
    return t;
  }();
  const double r = linear[r8];
  const double g = linear[g8];
  const double b = linear[b8];
  const double x = (0.4124564 * r + 0.3575761 * g + 0.1804375 * b) / 0.95047;
  const double y = 0.2126729 * r + 0.7151522 * g + 0.0721750 * b;
  const double z = (0.0193339 * r + 0.1191920 * g + 0.9503041 * b) / 1.08883;
  auto f = [](double t) {
    return t > 0.008856451679035631 ? std::cbrt(t) : (903.2962962962963 * t + 16.0) / 116.0;
  };
  const double fy = f(y);
  return {116.0 * fy - 16.0, 500.0 * (f(x) - fy), 200.0 * (fy - f(z))};
}

enum Edge { kTop = 0, kBottom = 1, kLeft = 2, kRight = 3 };

// borders[piece][edge] is piece_size * 3 doubles along the edge.
std::vector<std::array<std::vector<double>, 4>> extract_borders(const PieceSet& pieces,
                                                                CompatibilityMetric metric) {
  const int m = pieces.piece_size;
  std::vector<std::array<std::vector<double>, 4>> borders(pieces.pieces.size());
  for (std::size_t i = 0; i < pieces.pieces.size(); ++i) {
    const Image& piece = pieces.pieces[i];
    for (auto& edge : borders[i]) {
      edge.resize(static_cast<std::size_t>(m) * 3);
    }
    auto put = [&](Edge e, int k, int x, int y) {
      std::array<double, 3> v;
      if (metric == CompatibilityMetric::LabSsd) {
        v = rgb_to_lab(piece.at(x, y, 0), piece.at(x, y, 1), piece.at(x, y, 2));
      } else {
        v = {static_cast<double>(piece.at(x, y, 0)), static_cast<double>(piece.at(x, y, 1)),
             static_cast<double>(piece.at(x, y, 2))};
      }
      for (int c = 0; c < 3; ++c) {
        borders[i][e][static_cast<std::size_t>(k) * 3 + c] = v[c];
      }
    };
    for (int k = 0; k < m; ++k) {
      put(kTop, k, k, 0);
      put(kBottom, k, k, m - 1);
      put(kLeft, k, 0, k);
      put(kRight, k, m - 1, k);
    }
  }
  return borders;
}

double border_ssd(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// --- GA internals --------------------------------------------------------

struct Individual {
  std::vector<int> cells;
  double fitness = 0.0;
  std::uint64_t id = 0;
};

double cells_cost(const std::vector<int>& cells, int cols, int rows,
                  const CompatibilityTable& table) {
  double total = 0.0;
  for (int y = 0; y < rows; ++y) {
    for (int x = 0; x < cols; ++x) {
      const int a = cells[static_cast<std::size_t>(y) * cols + x];
      if (x + 1 < cols) {
        total += table.cost(a, cells[static_cast<std::size_t>(y) * cols + x + 1],
                            PieceRelation::RightOf);
      }
      if (y + 1 < rows) {
        total += table.cost(a, cells[static_cast<std::size_t>(y + 1) * cols + x],
                            PieceRelation::Below);
      }
    }
  }
  return total;
}

double unit_double(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

// Grows a child assembly piece by piece on a virtual board, preferring
// placements both parents agree on, then best-buddy extensions from either
// parent, then the most compatible free piece at a random open slot. Random
// pieces are injected at the configured mutation rate.
class KernelGrower {
 public:
  KernelGrower(const CompatibilityTable& table, int cols, int rows, double mutation_rate)
      : table_(table),
        cols_(cols),
        rows_(rows),
        vw_(2 * cols - 1),
        vh_(2 * rows - 1),
        mutation_(mutation_rate) {}

  std::vector<int> grow(const Individual& pa, const Individual& pb, std::mt19937_64& rng) {
    const int n = cols_ * rows_;
    vgrid_.assign(static_cast<std::size_t>(vw_) * vh_, -1);
    in_boundary_.assign(vgrid_.size(), 0);
    boundary_.clear();
    free_list_.resize(static_cast<std::size_t>(n));
    std::iota(free_list_.begin(), free_list_.end(), 0);
    free_pos_.resize(static_cast<std::size_t>(n));
    std::iota(free_pos_.begin(), free_pos_.end(), 0);
    apos_ = positions_of(pa.cells);
    bpos_ = positions_of(pb.cells);
    pa_ = &pa;
    pb_ = &pb;

    const int first = free_list_[uniform_below(rng, free_list_.size())];
    min_x_ = max_x_ = cols_ - 1;
    min_y_ = max_y_ = rows_ - 1;
    place(first, (rows_ - 1) * vw_ + (cols_ - 1));

    while (!free_list_.empty()) {
      compact_boundary();
      if (!try_agreement(rng) && !try_best_buddy(rng)) {
        place_most_compatible(rng);
      }
    }

    std::vector<int> cells(static_cast<std::size_t>(n), -1);
    for (int vy = min_y_; vy <= max_y_; ++vy) {
      for (int vx = min_x_; vx <= max_x_; ++vx) {
        const int piece = vgrid_[static_cast<std::size_t>(vy) * vw_ + vx];
        if (piece >= 0) {
          cells[static_cast<std::size_t>(vy - min_y_) * cols_ + (vx - min_x_)] = piece;
        }
      }
    }
    return cells;
  }

 private:
  static constexpr int kDx[4] = {1, -1, 0, 0};
  static constexpr int kDy[4] = {0, 0, 1, -1};
  static int opposite(int d) { return d ^ 1; }

  std::vector<int> positions_of(const std::vector<int>& cells) const {
    std::vector<int> pos(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      pos[static_cast<std::size_t>(cells[i])] = static_cast<int>(i);
    }
    return pos;
  }

  int parent_neighbor(const std::vector<int>& pos, const std::vector<int>& cells, int piece,
                      int dir) const {
    const int cell = pos[static_cast<std::size_t>(piece)];
    const int x = cell % cols_ + kDx[dir];
    const int y = cell / cols_ + kDy[dir];
    if (x < 0 || x >= cols_ || y < 0 || y >= rows_) {
      return -1;
    }
    return cells[static_cast<std::size_t>(y) * cols_ + x];
  }

  bool feasible(int vx, int vy) const {
    return std::max(max_x_, vx) - std::min(min_x_, vx) < cols_ &&
           std::max(max_y_, vy) - std::min(min_y_, vy) < rows_;
  }

  void remove_free(int piece) {
    const int idx = free_pos_[static_cast<std::size_t>(piece)];
    const int last = free_list_.back();
    free_list_[static_cast<std::size_t>(idx)] = last;
    free_pos_[static_cast<std::size_t>(last)] = idx;
    free_list_.pop_back();
    free_pos_[static_cast<std::size_t>(piece)] = -1;
  }

  bool is_free(int piece) const { return free_pos_[static_cast<std::size_t>(piece)] >= 0; }

  void place(int piece, int vcell) {
    vgrid_[static_cast<std::size_t>(vcell)] = piece;
    const int vx = vcell % vw_;
    const int vy = vcell / vw_;
    min_x_ = std::min(min_x_, vx);
    max_x_ = std::max(max_x_, vx);
    min_y_ = std::min(min_y_, vy);
    max_y_ = std::max(max_y_, vy);
    remove_free(piece);
    for (int d = 0; d < 4; ++d) {
      const int nx = vx + kDx[d];
      const int ny = vy + kDy[d];
      if (nx < 0 || nx >= vw_ || ny < 0 || ny >= vh_) continue;
      const int nv = ny * vw_ + nx;
      if (vgrid_[static_cast<std::size_t>(nv)] < 0 && !in_boundary_[static_cast<std::size_t>(nv)]) {
        in_boundary_[static_cast<std::size_t>(nv)] = 1;
        boundary_.push_back(nv);
      }
    }
  }

  // Occupied slots are gone for good and the bounding box only grows, so
  // slots dropped here can never become usable again.
  void compact_boundary() {
    std::size_t w = 0;
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
      const int v = boundary_[i];
      if (vgrid_[static_cast<std::size_t>(v)] >= 0 || !feasible(v % vw_, v / vw_)) {
        in_boundary_[static_cast<std::size_t>(v)] = 0;
        continue;
      }
      boundary_[w++] = v;
    }
    boundary_.resize(w);
  }

  int mutate_or(int piece, std::mt19937_64& rng) {
    if (unit_double(rng) < mutation_) {
      return free_list_[uniform_below(rng, free_list_.size())];
    }
    return piece;
  }

  bool try_agreement(std::mt19937_64& rng) {
    candidates_.clear();
    for (const int v : boundary_) {
      for (int d = 0; d < 4; ++d) {
        const int nx = v % vw_ + kDx[d];
        const int ny = v / vw_ + kDy[d];
        if (nx < 0 || nx >= vw_ || ny < 0 || ny >= vh_) continue;
        const int pp = vgrid_[static_cast<std::size_t>(ny) * vw_ + nx];
        if (pp < 0) continue;
        const int dir = opposite(d);  // direction from pp toward the slot
        const int qa = parent_neighbor(apos_, pa_->cells, pp, dir);
        if (qa < 0 || qa != parent_neighbor(bpos_, pb_->cells, pp, dir) || !is_free(qa)) {
          continue;
        }
        candidates_.push_back({v, qa});
      }
    }
    if (candidates_.empty()) {
      return false;
    }
    const auto& pick = candidates_[uniform_below(rng, candidates_.size())];
    place(mutate_or(pick.second, rng), pick.first);
    return true;
  }

  bool try_best_buddy(std::mt19937_64& rng) {
    candidates_.clear();
    for (const int v : boundary_) {
      for (int d = 0; d < 4; ++d) {
        const int nx = v % vw_ + kDx[d];
        const int ny = v / vw_ + kDy[d];
        if (nx < 0 || nx >= vw_ || ny < 0 || ny >= vh_) continue;
        const int pp = vgrid_[static_cast<std::size_t>(ny) * vw_ + nx];
        if (pp < 0) continue;
        const int dir = opposite(d);
        for (int parent = 0; parent < 2; ++parent) {
          const int q = parent == 0 ? parent_neighbor(apos_, pa_->cells, pp, dir)
                                    : parent_neighbor(bpos_, pb_->cells, pp, dir);
          if (q >= 0 && is_free(q) &&
              table_.best_buddies(pp, q, static_cast<PieceRelation>(dir))) {
            candidates_.push_back({v, q});
          }
        }
      }
    }
    if (candidates_.empty()) {
      return false;
    }
    const auto& pick = candidates_[uniform_below(rng, candidates_.size())];
    place(pick.second, pick.first);
    return true;
  }

  void place_most_compatible(std::mt19937_64& rng) {
    const int v = boundary_[uniform_below(rng, boundary_.size())];
    double best = kInf;
    int best_q = -1;
    for (const int q : free_list_) {
      double s = 0.0;
      for (int d = 0; d < 4; ++d) {
        const int nx = v % vw_ + kDx[d];
        const int ny = v / vw_ + kDy[d];
        if (nx < 0 || nx >= vw_ || ny < 0 || ny >= vh_) continue;
        const int pp = vgrid_[static_cast<std::size_t>(ny) * vw_ + nx];
        if (pp < 0) continue;
        s += table_.cost(pp, q, static_cast<PieceRelation>(opposite(d)));
      }
      if (s < best || (s == best && q < best_q)) {
        best = s;
        best_q = q;
      }
    }
    place(mutate_or(best_q, rng), v);
  }

  const CompatibilityTable& table_;
  int cols_;
  int rows_;
  int vw_;
  int vh_;
  double mutation_;
  std::vector<int> vgrid_;
  std::vector<char> in_boundary_;
  std::vector<int> boundary_;
  std::vector<int> free_list_;
  std::vector<int> free_pos_;
  std::vector<int> apos_;
  std::vector<int> bpos_;
  std::vector<std::pair<int, int>> candidates_;
  const Individual* pa_ = nullptr;
  const Individual* pb_ = nullptr;
  int min_x_ = 0, max_x_ = 0, min_y_ = 0, max_y_ = 0;
};

}  // namespace

// --- public surface ------------------------------------------------------

PieceSet cut_pieces(const Image& img, int piece_size) {
  if (piece_size < 1) {
    throw GeometryError("piece size must be at least 1");
  }
  if (img.width % piece_size != 0 || img.height % piece_size != 0) {
    throw GeometryError("piece size must divide both image dimensions");
  }
  PieceSet set;
  set.piece_size = piece_size;
  set.cols = img.width / piece_size;
  set.rows = img.height / piece_size;
  set.pieces.reserve(static_cast<std::size_t>(set.cols) * set.rows);
  for (int by = 0; by < set.rows; ++by) {
    for (int bx = 0; bx < set.cols; ++bx) {
      Image piece(piece_size, piece_size);
      for (int y = 0; y < piece_size; ++y) {
        for (int x = 0; x < piece_size; ++x) {
          for (int c = 0; c < kChannels; ++c) {
            piece.at(x, y, c) = img.at(bx * piece_size + x, by * piece_size + y, c);
          }
        }
      }
      set.pieces.push_back(std::move(piece));
    }
  }
  return set;
}

double CompatibilityTable::cost(int a, int b, PieceRelation rel) const {
  switch (rel) {
    case PieceRelation::RightOf:
      return right_[static_cast<std::size_t>(a) * n_ + b];
    case PieceRelation::LeftOf:
      return right_[static_cast<std::size_t>(b) * n_ + a];
    case PieceRelation::Below:
      return below_[static_cast<std::size_t>(a) * n_ + b];
    case PieceRelation::Above:
      return below_[static_cast<std::size_t>(b) * n_ + a];
  }
  return 0.0;
}

int CompatibilityTable::best_partner(int a, PieceRelation rel) const {
  return best_[static_cast<int>(rel)][static_cast<std::size_t>(a)];
}

bool CompatibilityTable::best_buddies(int a, int b, PieceRelation rel) const {
  switch (rel) {
    case PieceRelation::RightOf:
      return best_partner(a, PieceRelation::RightOf) == b &&
             best_partner(b, PieceRelation::LeftOf) == a;
    case PieceRelation::LeftOf:
      return best_partner(a, PieceRelation::LeftOf) == b &&
             best_partner(b, PieceRelation::RightOf) == a;
    case PieceRelation::Below:
      return best_partner(a, PieceRelation::Below) == b &&
             best_partner(b, PieceRelation::Above) == a;
    case PieceRelation::Above:
      return best_partner(a, PieceRelation::Above) == b &&
             best_partner(b, PieceRelation::Below) == a;
  }
  return false;
}

CompatibilityTable build_compatibility(const PieceSet& pieces, CompatibilityMetric metric) {
  if (pieces.count() < 2) {
    throw std::invalid_argument("compatibility table needs at least 2 pieces");
  }
  const int n = pieces.count();
  const auto borders = extract_borders(pieces, metric);

  CompatibilityTable table;
  table.n_ = n;
  table.right_.resize(static_cast<std::size_t>(n) * n);
  table.below_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table.right_[static_cast<std::size_t>(a) * n + b] =
          border_ssd(borders[a][kRight], borders[b][kLeft]);
      table.below_[static_cast<std::size_t>(a) * n + b] =
          border_ssd(borders[a][kBottom], borders[b][kTop]);
    }
  }

  for (auto& best : table.best_) {
    best.assign(static_cast<std::size_t>(n), -1);
  }
  for (int a = 0; a < n; ++a) {
    for (int rel = 0; rel < 4; ++rel) {
      double best = kInf;
      int arg = -1;
      for (int b = 0; b < n; ++b) {
        if (b == a) continue;
        const double c = table.cost(a, b, static_cast<PieceRelation>(rel));
        if (c < best) {
          best = c;
          arg = b;
        }
      }
      table.best_[rel][static_cast<std::size_t>(a)] = arg;
    }
  }
  return table;
}

Assembly Assembly::identity(int cols, int rows) {
  Assembly a;
  a.cols = cols;
  a.rows = rows;
  a.cells.resize(static_cast<std::size_t>(cols) * rows);
  std::iota(a.cells.begin(), a.cells.end(), 0);
  return a;
}

double assembly_cost(const Assembly& assembly, const CompatibilityTable& table) {
  return cells_cost(assembly.cells, assembly.cols, assembly.rows, table);
}

GaResult ga_solve_detailed(const PieceSet& pieces, const CompatibilityTable& table,
                           const GAParams& params) {
  const int n = pieces.count();
  if (n < 1 || n != pieces.cols * pieces.rows) {
    throw std::invalid_argument("piece set does not tile its board");
  }
  if (table.size() != n) {
    throw std::invalid_argument("compatibility table size does not match piece count");
  }
  if (params.population < 1 || params.elites < 1 || params.elites > params.population ||
      params.generations < 1 || params.mutation_rate < 0.0 || params.mutation_rate > 1.0) {
    throw std::invalid_argument("invalid GA parameters");
  }

  std::mt19937_64 rng(params.seed);
  std::uint64_t next_id = 0;

  const auto make_random = [&]() {
    Individual ind;
    ind.cells.resize(static_cast<std::size_t>(n));
    std::iota(ind.cells.begin(), ind.cells.end(), 0);
    for (std::size_t i = ind.cells.size() - 1; i > 0; --i) {
      std::swap(ind.cells[i], ind.cells[uniform_below(rng, i + 1)]);
    }
    ind.fitness = cells_cost(ind.cells, pieces.cols, pieces.rows, table);
    ind.id = next_id++;
    return ind;
  };

  std::vector<Individual> population;
  population.reserve(static_cast<std::size_t>(params.population));
  for (int i = 0; i < params.population; ++i) {
    population.push_back(make_random());
  }

  const auto sorted_order = [&]() {
    std::vector<int> order(population.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (population[a].fitness != population[b].fitness) {
        return population[a].fitness < population[b].fitness;
      }
      return population[a].id < population[b].id;
    });
    return order;
  };

  std::vector<int> order = sorted_order();
  Individual best_ever = population[static_cast<std::size_t>(order[0])];
  GaResult result;
  result.best_fitness_history.push_back(best_ever.fitness);

  // Rank-based roulette: weight population - rank for rank 0 (best) onward.
  std::vector<std::uint64_t> cumulative(population.size());
  const auto pick_parent = [&]() {
    const std::uint64_t t = uniform_below(rng, cumulative.back());
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), t);
    return order[static_cast<std::size_t>(it - cumulative.begin())];
  };

  KernelGrower grower(table, pieces.cols, pieces.rows, params.mutation_rate);

  for (int gen = 0; gen < params.generations; ++gen) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < population.size(); ++i) {
      acc += population.size() - i;
      cumulative[i] = acc;
    }

    std::vector<Individual> next;
    next.reserve(population.size());
    for (int e = 0; e < params.elites; ++e) {
      next.push_back(population[static_cast<std::size_t>(order[e])]);
    }
    while (static_cast<int>(next.size()) < params.population) {
      const Individual& pa = population[static_cast<std::size_t>(pick_parent())];
      const Individual& pb = population[static_cast<std::size_t>(pick_parent())];
      Individual child;
      child.cells = grower.grow(pa, pb, rng);
      child.fitness = cells_cost(child.cells, pieces.cols, pieces.rows, table);
      child.id = next_id++;
      next.push_back(std::move(child));
    }
    population = std::move(next);
    order = sorted_order();
    const Individual& top = population[static_cast<std::size_t>(order[0])];
    if (top.fitness < best_ever.fitness) {
      best_ever = top;
    }
    result.best_fitness_history.push_back(best_ever.fitness);
  }

  result.assembly.cols = pieces.cols;
  result.assembly.rows = pieces.rows;
  result.assembly.cells = best_ever.cells;
  result.fitness = best_ever.fitness;
  return result;
}

Assembly ga_solve(const PieceSet& pieces, const CompatibilityTable& table,
                  const GAParams& params) {
  return ga_solve_detailed(pieces, table, params).assembly;
}

Image assemble(const PieceSet& pieces, const Assembly& assembly) {
  const int n = pieces.count();
  if (assembly.cols != pieces.cols || assembly.rows != pieces.rows ||
      static_cast<int>(assembly.cells.size()) != n) {
    throw std::invalid_argument("assembly board does not match the piece set");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int piece : assembly.cells) {
    if (piece < 0 || piece >= n || seen[static_cast<std::size_t>(piece)]) {
      throw std::invalid_argument("assembly is not a bijection onto the pieces");
    }
    seen[static_cast<std::size_t>(piece)] = 1;
  }
  const int m = pieces.piece_size;
  Image out(pieces.cols * m, pieces.rows * m);
  for (int row = 0; row < pieces.rows; ++row) {
    for (int col = 0; col < pieces.cols; ++col) {
      const Image& piece = pieces.pieces[static_cast<std::size_t>(assembly.piece_at(col, row))];
      for (int y = 0; y < m; ++y) {
        for (int x = 0; x < m; ++x) {
          for (int c = 0; c < kChannels; ++c) {
            out.at(col * m + x, row * m + y, c) = piece.at(x, y, c);
          }
        }
      }
    }
  }
  return out;
}

std::string serialize_assembly(const Assembly& assembly) {
  std::ostringstream os;
  os << "cols=" << assembly.cols << " rows=" << assembly.rows << "\n";
  for (int row = 0; row < assembly.rows; ++row) {
    for (int col = 0; col < assembly.cols; ++col) {
      os << col << "," << row << " -> " << assembly.piece_at(col, row) << "\n";
    }
  }
  return os.str();
}

}  // namespace blockjig
