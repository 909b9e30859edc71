#include "blockjig/harness.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "blockjig/attack.hpp"
#include "blockjig/blocks.hpp"
#include "blockjig/cifar.hpp"
#include "blockjig/cipher.hpp"
#include "blockjig/metrics.hpp"
#include "blockjig/ppm.hpp"
#include "blockjig/resize.hpp"

namespace blockjig {

namespace {

std::string image_tag(int id) {
  std::ostringstream os;
  os << std::setfill('0') << std::setw(5) << id;
  return os.str();
}

}  // namespace

EvalReport run_experiment(const ExperimentConfig& config) {
  config.validate();
  if (kEvalSize % config.block_size != 0) {
    throw std::invalid_argument("block size must divide the evaluation size " +
                                std::to_string(kEvalSize));
  }

  const std::vector<LabeledImage> dataset = read_cifar10(config.dataset);
  if (static_cast<int>(dataset.size()) < config.count) {
    throw std::invalid_argument("dataset holds " + std::to_string(dataset.size()) +
                                " images, config requests " + std::to_string(config.count));
  }

  std::vector<AttackMode> attacks;
  if (config.mode == AttackMode::Both) {
    attacks = {AttackMode::Conventional, AttackMode::Proposed};
  } else {
    attacks = {config.mode};
  }

  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(config.out_dir);
  }

  // Ground truth shared by every image: the block permutation determines the
  // correct reassembly, the pixel permutation the correct placement.
  const BlockGeometry geom = BlockGeometry::from(kEvalSize, kEvalSize, config.block_size);
  const Permutation block_perm =
      make_permutation(config.key1, static_cast<std::size_t>(geom.block_count));
  const Permutation inv_block_perm = invert(block_perm);
  Assembly truth_assembly;
  truth_assembly.cols = geom.cols;
  truth_assembly.rows = geom.rows;
  truth_assembly.cells.assign(inv_block_perm.mapping().begin(), inv_block_perm.mapping().end());
  const Permutation pixel_perm =
      make_permutation(config.key2, static_cast<std::size_t>(geom.half) * geom.half);
  const Permutation identity_perm = Permutation::identity(pixel_perm.size());

  std::vector<EvalRecord> records(static_cast<std::size_t>(config.count) * attacks.size());

  const auto process_image = [&](int i) {
    const Image original = resize(dataset[static_cast<std::size_t>(i)].image, kEvalSize,
                                  kEvalSize, config.resize_mode);
    const CipherParams cipher{config.block_size, {config.key1, config.key2}};
    GAParams ga = config.ga;
    ga.seed = config.seed ^ static_cast<std::uint64_t>(i);

    Image encrypted;
    std::string encrypt_error;
    try {
      encrypted = encrypt(original, cipher);
    } catch (const std::exception& e) {
      encrypt_error = e.what();
    }

    for (std::size_t j = 0; j < attacks.size(); ++j) {
      EvalRecord rec;
      rec.image_id = i;
      rec.attack = attack_mode_name(attacks[j]);
      try {
        if (!encrypt_error.empty()) {
          throw std::runtime_error(encrypt_error);
        }
        const AttackOutcome outcome =
            attacks[j] == AttackMode::Conventional
                ? conventional_attack(encrypted, config.block_size, ga, config.metric)
                : proposed_attack(encrypted, config.block_size, ga, config.metric);
        rec.ssim_value = ssim(outcome.restored, original);
        rec.assembly_accuracy = direct_assembly_accuracy(outcome.assembly, truth_assembly);
        if (outcome.used_subblock_restoration) {
          rec.has_placement = true;
          rec.placement_accuracy = placement_accuracy(
              compose(outcome.placement.to_permutation(), pixel_perm), identity_perm);
        }
        if (!config.out_dir.empty()) {
          const auto path = std::filesystem::path(config.out_dir) /
                            (image_tag(i) + "_" + rec.attack + ".ppm");
          write_ppm_file(path.string(), outcome.restored);
        }
      } catch (const std::exception& e) {
        rec.error = e.what();
      }
      records[static_cast<std::size_t>(i) * attacks.size() + j] = std::move(rec);
    }
  };

  const int workers = std::min(config.threads, config.count);
  if (workers <= 1) {
    for (int i = 0; i < config.count; ++i) {
      process_image(i);
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < config.count; i = next.fetch_add(1)) {
          process_image(i);
        }
      });
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }

  EvalReport report;
  report.meta.dataset = config.dataset;
  report.meta.count = config.count;
  report.meta.block_size = config.block_size;
  report.meta.key1 = config.key1;
  report.meta.key2 = config.key2;
  report.meta.mode = attack_mode_name(config.mode);
  report.meta.ga = config.ga;
  report.meta.seed = config.seed;
  report.meta.resize_mode = resize_mode_name(config.resize_mode);
  report.meta.metric = metric_name(config.metric);
  report.records = std::move(records);

  if (!config.report_path.empty()) {
    std::ofstream out(config.report_path, std::ios::binary);
    if (!out) {
      throw FormatError("cannot open report file " + config.report_path + " for writing");
    }
    out << report.to_text();
  }
  return report;
}

}  // namespace blockjig
