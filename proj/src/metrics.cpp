#include "blockjig/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace blockjig {

namespace {

std::vector<double> luma_plane(const Image& img) {
  std::vector<double> plane(static_cast<std::size_t>(img.width) * img.height);
  std::size_t i = 0;
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      plane[i++] = 0.299 * img.at(x, y, 0) + 0.587 * img.at(x, y, 1) + 0.114 * img.at(x, y, 2);
    }
  }
  return plane;
}

std::vector<double> gaussian_kernel(int size, double sigma) {
  std::vector<double> k(static_cast<std::size_t>(size));
  const double center = (size - 1) / 2.0;
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double d = i - center;
    k[static_cast<std::size_t>(i)] = std::exp(-(d * d) / (2.0 * sigma * sigma));
    sum += k[static_cast<std::size_t>(i)];
  }
  for (double& v : k) {
    v /= sum;
  }
  return k;
}

// Separable valid-mode convolution with the same kernel along both axes;
// output is (w - size + 1) x (h - size + 1).
std::vector<double> window_filter(const std::vector<double>& plane, int w, int h,
                                  const std::vector<double>& kernel) {
  const int size = static_cast<int>(kernel.size());
  const int ow = w - size + 1;
  const int oh = h - size + 1;
  std::vector<double> rowpass(static_cast<std::size_t>(ow) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < size; ++k) {
        acc += kernel[static_cast<std::size_t>(k)] * plane[static_cast<std::size_t>(y) * w + x + k];
      }
      rowpass[static_cast<std::size_t>(y) * ow + x] = acc;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(ow) * oh);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < size; ++k) {
        acc += kernel[static_cast<std::size_t>(k)] * rowpass[static_cast<std::size_t>(y + k) * ow + x];
      }
      out[static_cast<std::size_t>(y) * ow + x] = acc;
    }
  }
  return out;
}

}  // namespace

double ssim(const Image& a, const Image& b, const SsimParams& params) {
  if (!a.same_size(b)) {
    throw std::invalid_argument("ssim requires images of equal dimensions");
  }
  if (a.width < params.window_size || a.height < params.window_size) {
    throw std::invalid_argument("image is smaller than the ssim window");
  }

  const std::vector<double> la = luma_plane(a);
  const std::vector<double> lb = luma_plane(b);
  const std::size_t npix = la.size();
  std::vector<double> laa(npix);
  std::vector<double> lbb(npix);
  std::vector<double> lab(npix);
  for (std::size_t i = 0; i < npix; ++i) {
    laa[i] = la[i] * la[i];
    lbb[i] = lb[i] * lb[i];
    lab[i] = la[i] * lb[i];
  }

  const std::vector<double> kernel = gaussian_kernel(params.window_size, params.sigma);
  const std::vector<double> mu_a = window_filter(la, a.width, a.height, kernel);
  const std::vector<double> mu_b = window_filter(lb, a.width, a.height, kernel);
  const std::vector<double> e_aa = window_filter(laa, a.width, a.height, kernel);
  const std::vector<double> e_bb = window_filter(lbb, a.width, a.height, kernel);
  const std::vector<double> e_ab = window_filter(lab, a.width, a.height, kernel);

  double total = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    const double var_a = e_aa[i] - mu_a[i] * mu_a[i];
    const double var_b = e_bb[i] - mu_b[i] * mu_b[i];
    const double cov = e_ab[i] - mu_a[i] * mu_b[i];
    const double num = (2.0 * (mu_a[i] * mu_b[i]) + params.c1) * (2.0 * cov + params.c2);
    const double den = (mu_a[i] * mu_a[i] + mu_b[i] * mu_b[i] + params.c1) *
                       (var_a + var_b + params.c2);
    total += num / den;
  }
  return total / static_cast<double>(mu_a.size());
}

double placement_accuracy(const Permutation& recovered, const Permutation& truth) {
  if (recovered.size() != truth.size()) {
    throw std::invalid_argument("permutations must have equal length");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < recovered.size(); ++i) {
    if (recovered[i] == truth[i]) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(recovered.size());
}

double direct_assembly_accuracy(const Assembly& a, const Assembly& truth) {
  if (a.cols != truth.cols || a.rows != truth.rows) {
    throw std::invalid_argument("assemblies must share the same board");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    if (a.cells[i] == truth.cells[i]) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(a.cells.size());
}

}  // namespace blockjig
