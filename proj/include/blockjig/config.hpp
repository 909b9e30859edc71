#pragma once

#include <cstdint>
#include <string>

#include "blockjig/jigsaw.hpp"
#include "blockjig/resize.hpp"

namespace blockjig {

enum class AttackMode { Conventional, Proposed, Both };

AttackMode parse_attack_mode(const std::string& s);
std::string attack_mode_name(AttackMode mode);
ResizeMode parse_resize_mode(const std::string& s);
std::string resize_mode_name(ResizeMode mode);
CompatibilityMetric parse_metric(const std::string& s);
std::string metric_name(CompatibilityMetric metric);

// Everything one evaluation run depends on. Flags mirror these fields; a
// config file provides defaults that explicit flags override.
struct ExperimentConfig {
  std::string dataset;
  int count = 30;
  int block_size = 16;
  std::uint64_t key1 = 1;
  std::uint64_t key2 = 2;
  AttackMode mode = AttackMode::Both;
  GAParams ga;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string report_path;
  ResizeMode resize_mode = ResizeMode::Bilinear;
  CompatibilityMetric metric = CompatibilityMetric::LabSsd;
  int threads = 1;

  void validate() const;
};

// Flat key=value lines; '#' starts a comment. Unknown keys are rejected.
ExperimentConfig apply_config_file(ExperimentConfig base, const std::string& path);

}  // namespace blockjig
