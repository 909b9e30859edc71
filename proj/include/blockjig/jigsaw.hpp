#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockjig/image.hpp"

namespace blockjig {

// Square tiles cut from an image in raster order, plus the board they tile.
struct PieceSet {
  int piece_size = 0;
  int cols = 0;
  int rows = 0;
  std::vector<Image> pieces;

  int count() const { return static_cast<int>(pieces.size()); }
};

PieceSet cut_pieces(const Image& img, int piece_size);

// Relation of b to a: D(a, b, RightOf) is the cost of placing b immediately
// to the right of a, and so on.
enum class PieceRelation { RightOf = 0, LeftOf = 1, Below = 2, Above = 3 };

enum class CompatibilityMetric { LabSsd, RgbSsd };

// Pairwise border dissimilarities plus rank-1 partners per relation.
// D(a, b, RightOf) == D(b, a, LeftOf) and D(a, b, Below) == D(b, a, Above)
// hold exactly by construction.
class CompatibilityTable {
 public:
  int size() const { return n_; }
  double cost(int a, int b, PieceRelation rel) const;
  int best_partner(int a, PieceRelation rel) const;
  bool best_buddies(int a, int b, PieceRelation rel) const;

  friend CompatibilityTable build_compatibility(const PieceSet&, CompatibilityMetric);

 private:
  int n_ = 0;
  std::vector<double> right_;  // right_[a*n + b] = D(a, b, RightOf)
  std::vector<double> below_;
  std::vector<int> best_[4];  // rank-1 partner per relation
};

CompatibilityTable build_compatibility(const PieceSet& pieces,
                                       CompatibilityMetric metric = CompatibilityMetric::LabSsd);

// Bijection from board cells to piece indices; cells[row*cols + col].
struct Assembly {
  int cols = 0;
  int rows = 0;
  std::vector<int> cells;

  static Assembly identity(int cols, int rows);
  int piece_at(int col, int row) const { return cells[static_cast<std::size_t>(row) * cols + col]; }

  friend bool operator==(const Assembly&, const Assembly&) = default;
};

struct GAParams {
  int population = 1000;
  int generations = 100;
  int elites = 4;
  double mutation_rate = 0.05;
  std::uint64_t seed = 0;
};

// Total border dissimilarity over all horizontally and vertically adjacent
// placed pairs; the quantity the solver minimizes.
double assembly_cost(const Assembly& assembly, const CompatibilityTable& table);

struct GaResult {
  Assembly assembly;
  double fitness = 0.0;
  // Best fitness ever seen after the initial population and after each
  // generation; non-increasing by construction.
  std::vector<double> best_fitness_history;
};

// Generational GA with elitism and kernel-growing crossover. Deterministic
// for a fixed seed. Returns the best individual ever seen.
GaResult ga_solve_detailed(const PieceSet& pieces, const CompatibilityTable& table,
                           const GAParams& params);
Assembly ga_solve(const PieceSet& pieces, const CompatibilityTable& table,
                  const GAParams& params);

// Pastes pieces at their assigned cells; incomplete assemblies are rejected.
Image assemble(const PieceSet& pieces, const Assembly& assembly);

// One "col,row -> piece" line per cell, raster order, all indices 0-based.
std::string serialize_assembly(const Assembly& assembly);

}  // namespace blockjig
