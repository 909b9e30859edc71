#include "blockjig/report.hpp"

#include <iomanip>
#include <sstream>

namespace blockjig {

namespace {

std::string fixed6(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << v;
  return os.str();
}

}  // namespace

double EvalReport::mean_ssim(const std::string& attack) const {
  double sum = 0.0;
  int n = 0;
  for (const EvalRecord& r : records) {
    if (r.attack == attack && r.ok()) {
      sum += r.ssim_value;
      ++n;
    }
  }
  return n == 0 ? 0.0 : sum / n;
}

int EvalReport::error_count(const std::string& attack) const {
  int n = 0;
  for (const EvalRecord& r : records) {
    if (r.attack == attack && !r.ok()) {
      ++n;
    }
  }
  return n;
}

std::string EvalReport::to_text() const {
  std::ostringstream os;
  os << "# blockjig evaluation report\n";
  os << "dataset=" << meta.dataset << "\n";
  os << "count=" << meta.count << "\n";
  os << "block_size=" << meta.block_size << "\n";
  os << "key1=" << meta.key1 << "\n";
  os << "key2=" << meta.key2 << "\n";
  os << "mode=" << meta.mode << "\n";
  os << "population=" << meta.ga.population << "\n";
  os << "generations=" << meta.ga.generations << "\n";
  os << "elites=" << meta.ga.elites << "\n";
  os << "mutation_rate=" << fixed6(meta.ga.mutation_rate) << "\n";
  os << "seed=" << meta.seed << "\n";
  os << "resize_mode=" << meta.resize_mode << "\n";
  os << "metric=" << meta.metric << "\n";
  os << "alignment=none\n";

  for (const EvalRecord& r : records) {
    os << "image=" << std::setfill('0') << std::setw(5) << r.image_id << std::setfill(' ')
       << " attack=" << r.attack;
    if (r.ok()) {
      os << " status=ok ssim=" << fixed6(r.ssim_value)
         << " assembly_accuracy=" << fixed6(r.assembly_accuracy);
      if (r.has_placement) {
        os << " placement_accuracy=" << fixed6(r.placement_accuracy);
      }
    } else {
      os << " status=error error=\"" << r.error << "\"";
    }
    os << "\n";
  }

  for (const std::string& attack : {std::string("conventional"), std::string("proposed")}) {
    int n = 0;
    for (const EvalRecord& r : records) {
      if (r.attack == attack) {
        ++n;
      }
    }
    if (n == 0) {
      continue;
    }
    os << "summary attack=" << attack << " images=" << n
       << " errors=" << error_count(attack) << " mean_ssim=" << fixed6(mean_ssim(attack))
       << "\n";
  }
  return os.str();
}

}  // namespace blockjig
