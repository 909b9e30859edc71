#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockjig/jigsaw.hpp"

namespace blockjig {

struct EvalRecord {
  int image_id = 0;
  std::string attack;  // "conventional" | "proposed"
  double ssim_value = 0.0;
  double assembly_accuracy = 0.0;
  double placement_accuracy = 0.0;
  bool has_placement = false;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

struct RunMetadata {
  std::string dataset;
  int count = 0;
  int block_size = 16;
  std::uint64_t key1 = 0;
  std::uint64_t key2 = 0;
  std::string mode;
  GAParams ga;
  std::uint64_t seed = 0;
  std::string resize_mode;
  std::string metric;
};

// Per-image evaluation rows plus run metadata. Serialization is byte-stable:
// fixed field order, fixed float formatting, no timing or host information.
struct EvalReport {
  RunMetadata meta;
  std::vector<EvalRecord> records;

  double mean_ssim(const std::string& attack) const;
  int error_count(const std::string& attack) const;
  std::string to_text() const;
};

}  // namespace blockjig
