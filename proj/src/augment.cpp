#include "dfsmc/augment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dfsmc/parallel.hpp"

namespace fs = std::filesystem;

namespace dfsmc {

AffineParams sample_affine(Rng& rng) {
  AffineParams p;
  p.rotation_deg = rng.uniform(0.0, 360.0);
  p.shear_x = rng.uniform(-0.05, 0.05);
  p.shear_y = rng.uniform(-0.05, 0.05);
  p.reflect_x = rng.coin() ? 1 : -1;
  p.reflect_y = rng.coin() ? 1 : -1;
  p.scale = rng.uniform(0.5, 1.0);
  return p;
}

namespace {

struct Mat2 {
  // row-major 2x2
  double a, b, c, d;

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 inverse() const {
    double det = a * d - b * c;
    if (std::abs(det) < 1e-12) {
      throw std::runtime_error("degenerate affine transform");
    }
    return {d / det, -b / det, -c / det, a / det};
  }
};

double sample_bilinear_black(const GrayImage& img, double sx, double sy) {
  int x0 = static_cast<int>(std::floor(sx));
  int y0 = static_cast<int>(std::floor(sy));
  double fx = sx - x0;
  double fy = sy - y0;
  auto pix = [&](int y, int x) -> double {
    if (x < 0 || y < 0 || x >= img.width || y >= img.height) return 0.0;
    return img.at(y, x);
  };
  return (1 - fy) * ((1 - fx) * pix(y0, x0) + fx * pix(y0, x0 + 1)) +
         fy * ((1 - fx) * pix(y0 + 1, x0) + fx * pix(y0 + 1, x0 + 1));
}

}  // namespace

GrayImage apply_affine(const GrayImage& img, const AffineParams& p) {
  const double theta = p.rotation_deg * 3.14159265358979323846 / 180.0;
  const Mat2 reflect{static_cast<double>(p.reflect_x), 0.0, 0.0,
                     static_cast<double>(p.reflect_y)};
  const Mat2 scale{p.scale, 0.0, 0.0, p.scale};
  const Mat2 shear{1.0, p.shear_x, p.shear_y, 1.0};
  const Mat2 rot{std::cos(theta), -std::sin(theta), std::sin(theta),
                 std::cos(theta)};
  // source -> destination about the center; sampling uses the inverse
  const Mat2 forward = rot * (shear * (scale * reflect));
  const Mat2 inv = forward.inverse();

  const double cx = (img.width - 1) / 2.0;
  const double cy = (img.height - 1) / 2.0;

  GrayImage out = make_image(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double dx = x - cx;
      double dy = y - cy;
      double sx = inv.a * dx + inv.b * dy + cx;
      double sy = inv.c * dx + inv.d * dy + cy;
      double v = std::clamp(sample_bilinear_black(img, sx, sy), 0.0, 255.0);
      out.at(y, x) = static_cast<uint8_t>(std::lround(v));
    }
  }
  return out;
}

DatasetManifest augment_split(const DatasetManifest& manifest,
                              const fs::path& root, int copies_per_sample,
                              uint64_t seed) {
  if (copies_per_sample < 0) {
    throw std::runtime_error("copies_per_sample must be >= 0");
  }
  DatasetManifest out = manifest;
  if (copies_per_sample == 0) return out;

  struct Task {
    size_t record_index;
    int copy;
    std::string out_rel;
  };
  std::vector<Task> tasks;
  for (size_t i = 0; i < manifest.records.size(); ++i) {
    const auto& r = manifest.records[i];
    if (r.split != Split::train) continue;
    fs::path rel(r.image_path);
    fs::path stem_dir = rel.parent_path();
    std::string stem = rel.stem().string();
    for (int k = 0; k < copies_per_sample; ++k) {
      std::string name = stem + ".aug" + std::to_string(k) + ".pgm";
      tasks.push_back(
          {i, k, (stem_dir.empty() ? fs::path(name) : stem_dir / name)
                     .generic_string()});
    }
  }

  parallel_for(tasks.size(), [&](size_t t) {
    const Task& task = tasks[t];
    const auto& r = manifest.records[task.record_index];
    GrayImage img = read_image(root / r.image_path);
    Rng rng(derive_seed(seed, "augment", task.record_index,
                        static_cast<uint64_t>(task.copy)));
    AffineParams params = sample_affine(rng);
    write_image(apply_affine(img, params), root / task.out_rel);
  });

  for (const auto& task : tasks) {
    SampleRecord r = manifest.records[task.record_index];
    r.image_path = task.out_rel;
    r.split = Split::train;
    out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace dfsmc
