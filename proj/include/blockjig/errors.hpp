#pragma once

#include <stdexcept>
#include <string>

namespace blockjig {

// An image does not satisfy the block-grid constraints of an operation
// (block size vs. image size, odd block size, wrong piece count).
class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input to a file decoder (PPM, dataset batch, config file).
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// The sub-block restoration cannot proceed: too few candidate positions,
// or the greedy pairing ran out of free positions on a degenerate input.
class AttackError : public std::runtime_error {
 public:
  explicit AttackError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace blockjig
