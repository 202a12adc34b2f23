#ifndef DFSMC_AUGMENT_HPP
#define DFSMC_AUGMENT_HPP

#include <filesystem>

#include "dfsmc/image.hpp"
#include "dfsmc/manifest.hpp"
#include "dfsmc/rng.hpp"

namespace dfsmc {

// Random affine transform parameters with their sampling ranges.
struct AffineParams {
  double rotation_deg = 0.0;  // [0, 360]
  double shear_x = 0.0;       // [-0.05, 0.05]
  double shear_y = 0.0;       // [-0.05, 0.05]
  int reflect_x = 1;          // {-1, +1}
  int reflect_y = 1;          // {-1, +1}
  double scale = 1.0;         // [0.5, 1]
};

// Uniform draw from each range; reflections are fair coin flips.
// Draw order: rotation, shear_x, shear_y, reflect_x, reflect_y, scale.
AffineParams sample_affine(Rng& rng);

// Applies the composite map about the image center: reflect, then scale,
// then shear, then rotate. Sampling is bilinear on the float view with
// out-of-bounds sources reading as 0 (black). Output has the input's size.
// Identity parameters reproduce the input byte-for-byte.
GrayImage apply_affine(const GrayImage& img, const AffineParams& p);

// Writes copies_per_sample transformed copies of every train image next to
// the original (named <stem>.aug<k>.pgm) and appends matching train records.
// Test records are untouched. Deterministic per (manifest, copies, seed).
DatasetManifest augment_split(const DatasetManifest& manifest,
                              const std::filesystem::path& root,
                              int copies_per_sample, uint64_t seed);

}  // namespace dfsmc

#endif
