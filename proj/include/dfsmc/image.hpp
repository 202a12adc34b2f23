#ifndef DFSMC_IMAGE_HPP
#define DFSMC_IMAGE_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

namespace dfsmc {

// 2-D 8-bit grayscale raster, row-major, one byte per pixel.
// Byte b maps to b/255 on the float view used for compute.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> pixels;

  uint8_t at(int y, int x) const {
    return pixels[static_cast<size_t>(y) * width + x];
  }
  uint8_t& at(int y, int x) {
    return pixels[static_cast<size_t>(y) * width + x];
  }
  bool operator==(const GrayImage&) const = default;
};

GrayImage make_image(int width, int height, uint8_t fill = 0);

// Maps a binary's byte count to an image width. Bracket i applies when
// size <= brackets[i].first; beyond the last bracket fallback_width is used.
struct WidthSchedule {
  std::vector<std::pair<size_t, int>> brackets;
  int fallback_width = 512;

  int width_for(size_t size) const;
  static WidthSchedule default_schedule();
};

// Byte i of the binary becomes pixel i; the last row is zero-padded.
// height = ceil(|data| / width). Throws "empty binary" on empty input.
GrayImage bytes_to_image(std::span<const uint8_t> data,
                         const WidthSchedule& schedule);

// Read dispatches on magic bytes: binary PGM (P5) or 8-bit grayscale PNG.
// Write always emits binary PGM with maxval 255; write then read is
// byte-identical.
GrayImage read_image(const std::filesystem::path& path);
void write_image(const GrayImage& img, const std::filesystem::path& path);

GrayImage decode_pgm(std::span<const uint8_t> bytes);
std::vector<uint8_t> encode_pgm(const GrayImage& img);
GrayImage decode_png(std::span<const uint8_t> bytes);

// Bilinear resample on the float view. Destination pixel centers map to
// source coordinates via x_src = (x_dst + 0.5) * w_src / w_dst - 0.5 and
// samples are clamped to the border. Output values are rounded to the
// nearest byte and clamped to [0,255].
GrayImage resize_image(const GrayImage& img, int w, int h);

std::vector<uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path,
                      std::span<const uint8_t> bytes);

}  // namespace dfsmc

#endif
