#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace blockjig {

// Bijection on {0, ..., length-1}, stored as an index array.
//
// The array is used in "gather" form everywhere in this project: applying a
// permutation p to a sequence v produces out[i] = v[p[i]]. Applying the
// inverse of p undoes that. The mapping itself carries no orientation; only
// the apply convention does, and it is fixed project-wide so that recovered
// inverse permutations compose with the originating ones to the identity.
class Permutation {
 public:
  // Validates that the mapping is a bijection.
  explicit Permutation(std::vector<std::uint32_t> mapping);

  static Permutation identity(std::size_t length);

  std::size_t size() const { return map_.size(); }
  std::uint32_t operator[](std::size_t i) const { return map_[i]; }
  const std::vector<std::uint32_t>& mapping() const { return map_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> map_;
};

// Deterministic unbiased shuffle: identical (seed, length) pairs yield the
// same permutation on every platform. Throws std::invalid_argument for
// length 0.
Permutation make_permutation(std::uint64_t seed, std::size_t length);

// q with q[p[i]] = i for all i.
Permutation invert(const Permutation& p);

// compose(f, g)[i] = f[g[i]].
Permutation compose(const Permutation& f, const Permutation& g);

// out[i] = items[p[i]].
template <typename T>
std::vector<T> gather(const Permutation& p, const std::vector<T>& items) {
  std::vector<T> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.push_back(items[p[i]]);
  }
  return out;
}

// Draw a uniform integer in [0, n) from a 64-bit generator without modulo
// bias; used by every seeded shuffle and the puzzle solver.
template <typename Rng>
std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
  std::uint64_t x = rng();
  while (x >= limit) {
    x = rng();
  }
  return x % n;
}

}  // namespace blockjig
