#pragma once

#include "blockjig/config.hpp"
#include "blockjig/report.hpp"

namespace blockjig {

// Side length every evaluated image is resized to before encryption.
inline constexpr int kEvalSize = 224;

// Per image: resize, encrypt, run the selected attacks, score SSIM against
// the resized original, and write restored images into out_dir when set.
// Per-image failures are recorded and the batch continues. The result is
// fully reproducible from the config, with or without worker threads.
EvalReport run_experiment(const ExperimentConfig& config);

}  // namespace blockjig
