#include "blockjig/metrics.hpp"

#include <string>
#include <vector>

#include "blockjig/cifar.hpp"
#include "blockjig/report.hpp"
#include "doctest.h"
#include "support/synthetic.hpp"

using namespace blockjig;
using testsupport::noise_image;
using testsupport::smooth_scene;

TEST_CASE("ssim of an image with itself is exactly one") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const Image img = noise_image(seed, 48, 32);
    CHECK(ssim(img, img) == 1.0);
  }
  const Image smooth = smooth_scene(4, 64, 64);
  CHECK(ssim(smooth, smooth) == 1.0);
}

TEST_CASE("ssim is symmetric bit for bit") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Image a = noise_image(seed, 40, 40);
    const Image b = smooth_scene(seed + 50, 40, 40);
    CHECK(ssim(a, b) == ssim(b, a));
  }
}

TEST_CASE("inverted natural images score negative ssim") {
  const auto records = read_cifar10(BLOCKJIG_FIXTURE_BATCH);
  REQUIRE(!records.empty());
  const Image& img = records[0].image;
  Image inverted = img;
  for (auto& s : inverted.samples) s = static_cast<std::uint8_t>(255 - s);
  CHECK(ssim(img, inverted) < 0.0);
}

TEST_CASE("ssim below one when luma differs") {
  const Image img = smooth_scene(8, 48, 48);
  Image other = img;
  other.at(20, 20, 0) = static_cast<std::uint8_t>(other.at(20, 20, 0) ^ 0x40);
  CHECK(ssim(img, other) < 1.0);
}

TEST_CASE("ssim rejects mismatched dimensions and tiny images") {
  CHECK_THROWS_AS(ssim(Image(32, 32), Image(32, 16)), std::invalid_argument);
  CHECK_THROWS_AS(ssim(Image(8, 8), Image(8, 8)), std::invalid_argument);
}

TEST_CASE("placement accuracy counts exact matches") {
  const Permutation p = make_permutation(5, 64);
  CHECK(placement_accuracy(p, p) == 1.0);
  std::vector<std::uint32_t> swapped = p.mapping();
  std::swap(swapped[3], swapped[40]);
  CHECK(placement_accuracy(Permutation(swapped), p) == doctest::Approx(62.0 / 64.0));
  CHECK_THROWS_AS(placement_accuracy(p, Permutation::identity(8)), std::invalid_argument);
}

TEST_CASE("assembly accuracy counts matching cells") {
  Assembly truth = Assembly::identity(14, 14);
  Assembly same = truth;
  CHECK(direct_assembly_accuracy(same, truth) == 1.0);
  std::swap(same.cells[0], same.cells[100]);
  CHECK(direct_assembly_accuracy(same, truth) == doctest::Approx(194.0 / 196.0));
  CHECK_THROWS_AS(direct_assembly_accuracy(Assembly::identity(2, 2), truth),
                  std::invalid_argument);
}

TEST_CASE("report mean recomputes from per-image rows") {
  EvalReport report;
  report.meta.mode = "both";
  for (int i = 0; i < 4; ++i) {
    EvalRecord rec;
    rec.image_id = i;
    rec.attack = "proposed";
    rec.ssim_value = 0.25 * (i + 1);
    report.records.push_back(rec);
  }
  CHECK(report.mean_ssim("proposed") == doctest::Approx((0.25 + 0.5 + 0.75 + 1.0) / 4.0));
  CHECK(report.mean_ssim("conventional") == 0.0);

  EvalRecord bad;
  bad.image_id = 4;
  bad.attack = "proposed";
  bad.error = "boom";
  report.records.push_back(bad);
  CHECK(report.error_count("proposed") == 1);
  const std::string text = report.to_text();
  CHECK(text.find("image=00004 attack=proposed status=error error=\"boom\"") !=
        std::string::npos);
  CHECK(text.find("summary attack=proposed images=5 errors=1 mean_ssim=0.625000") !=
        std::string::npos);
}
