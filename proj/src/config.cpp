#include "blockjig/config.hpp"

#include <fstream>
#include <stdexcept>

#include "blockjig/errors.hpp"

namespace blockjig {

AttackMode parse_attack_mode(const std::string& s) {
  if (s == "conventional") return AttackMode::Conventional;
  if (s == "proposed") return AttackMode::Proposed;
  if (s == "both") return AttackMode::Both;
  throw std::invalid_argument("unknown attack mode '" + s +
                              "' (expected conventional, proposed or both)");
}

std::string attack_mode_name(AttackMode mode) {
  switch (mode) {
    case AttackMode::Conventional:
      return "conventional";
    case AttackMode::Proposed:
      return "proposed";
    case AttackMode::Both:
      return "both";
  }
  return "";
}

ResizeMode parse_resize_mode(const std::string& s) {
  if (s == "bilinear") return ResizeMode::Bilinear;
  if (s == "nearest") return ResizeMode::Nearest;
  throw std::invalid_argument("unknown resize mode '" + s + "' (expected bilinear or nearest)");
}

std::string resize_mode_name(ResizeMode mode) {
  return mode == ResizeMode::Bilinear ? "bilinear" : "nearest";
}

CompatibilityMetric parse_metric(const std::string& s) {
  if (s == "lab") return CompatibilityMetric::LabSsd;
  if (s == "rgb") return CompatibilityMetric::RgbSsd;
  throw std::invalid_argument("unknown compatibility metric '" + s + "' (expected lab or rgb)");
}

std::string metric_name(CompatibilityMetric metric) {
  return metric == CompatibilityMetric::LabSsd ? "lab" : "rgb";
}

void ExperimentConfig::validate() const {
  if (dataset.empty()) {
    throw std::invalid_argument("dataset path is required");
  }
  if (count < 1) {
    throw std::invalid_argument("count must be at least 1");
  }
  if (block_size < 2 || block_size % 2 != 0) {
    throw std::invalid_argument("block size must be even and at least 2");
  }
  if (ga.population < 1 || ga.elites < 1 || ga.elites > ga.population || ga.generations < 1 ||
      ga.mutation_rate < 0.0 || ga.mutation_rate > 1.0) {
    throw std::invalid_argument("invalid GA parameters");
  }
  if (threads < 1) {
    throw std::invalid_argument("threads must be at least 1");
  }
}

ExperimentConfig apply_config_file(ExperimentConfig base, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open config file " + path);
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw FormatError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "dataset") {
        base.dataset = value;
      } else if (key == "count") {
        base.count = std::stoi(value);
      } else if (key == "block_size") {
        base.block_size = std::stoi(value);
      } else if (key == "key1") {
        base.key1 = std::stoull(value);
      } else if (key == "key2") {
        base.key2 = std::stoull(value);
      } else if (key == "mode") {
        base.mode = parse_attack_mode(value);
      } else if (key == "population") {
        base.ga.population = std::stoi(value);
      } else if (key == "generations") {
        base.ga.generations = std::stoi(value);
      } else if (key == "elites") {
        base.ga.elites = std::stoi(value);
      } else if (key == "mutation_rate") {
        base.ga.mutation_rate = std::stod(value);
      } else if (key == "seed") {
        base.seed = std::stoull(value);
      } else if (key == "out_dir") {
        base.out_dir = value;
      } else if (key == "report") {
        base.report_path = value;
      } else if (key == "resize_mode") {
        base.resize_mode = parse_resize_mode(value);
      } else if (key == "metric") {
        base.metric = parse_metric(value);
      } else if (key == "threads") {
        base.threads = std::stoi(value);
      } else {
        throw FormatError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const FormatError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw FormatError(path + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const std::out_of_range&) {
      throw FormatError(path + ":" + std::to_string(lineno) + ": value out of range");
    }
  }
  return base;
}

}  // namespace blockjig
