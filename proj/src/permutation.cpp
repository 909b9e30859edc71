#include "blockjig/permutation.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

namespace blockjig {

Permutation::Permutation(std::vector<std::uint32_t> mapping) : map_(std::move(mapping)) {
  std::vector<char> seen(map_.size(), 0);
  for (std::uint32_t v : map_) {
    if (v >= map_.size() || seen[v]) {
      throw std::invalid_argument("permutation mapping is not a bijection");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t length) {
  std::vector<std::uint32_t> map(length);
  std::iota(map.begin(), map.end(), 0u);
  return Permutation(std::move(map));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation make_permutation(std::uint64_t seed, std::size_t length) {
  if (length == 0) {
    throw std::invalid_argument("permutation length must be at least 1");
  }
  std::vector<std::uint32_t> map(length);
  std::iota(map.begin(), map.end(), 0u);
  // mt19937_64 output is fully specified by the standard, and uniform_below
  // avoids the implementation-defined std::uniform_int_distribution, so the
  // shuffle is reproducible across compilers.
  std::mt19937_64 rng(seed);
  for (std::size_t i = length - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i + 1));
    std::swap(map[i], map[j]);
  }
  return Permutation(std::move(map));
}

Permutation invert(const Permutation& p) {
  std::vector<std::uint32_t> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    inv[p[i]] = static_cast<std::uint32_t>(i);
  }
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) {
    throw std::invalid_argument("composed permutations must have equal length");
  }
  std::vector<std::uint32_t> out(f.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    out[i] = f[g[i]];
  }
  return Permutation(std::move(out));
}

}  // namespace blockjig
