#include "dfsmc/image.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace dfsmc {

GrayImage make_image(int width, int height, uint8_t fill) {
  if (width < 1 || height < 1) {
    throw std::runtime_error("image dimensions must be at least 1x1");
  }
  GrayImage img;
  img.width = width;
  img.height = height;
  img.pixels.assign(static_cast<size_t>(width) * height, fill);
  return img;
}

int WidthSchedule::width_for(size_t size) const {
  for (const auto& [limit, width] : brackets) {
    if (size <= limit) return width;
  }
  return fallback_width;
}

WidthSchedule WidthSchedule::default_schedule() {
  WidthSchedule s;
  s.brackets = {{1024, 32}, {8192, 64}, {65536, 128}, {524288, 256}};
  s.fallback_width = 512;
  return s;
}

GrayImage bytes_to_image(std::span<const uint8_t> data,
                         const WidthSchedule& schedule) {
  if (data.empty()) throw std::runtime_error("empty binary");
  int width = schedule.width_for(data.size());
  size_t height = (data.size() + width - 1) / width;
  GrayImage img = make_image(width, static_cast<int>(height), 0);
  std::copy(data.begin(), data.end(), img.pixels.begin());
  return img;
}

std::vector<uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path,
                      std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

// Reads the next decimal token from a PGM header, skipping whitespace and
// '#' comments.
long pgm_token(std::span<const uint8_t> bytes, size_t& pos) {
  while (pos < bytes.size()) {
    uint8_t c = bytes[pos];
    if (c == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (std::isspace(c)) {
      ++pos;
    } else {
      break;
    }
  }
  if (pos >= bytes.size() || !std::isdigit(bytes[pos])) {
    throw std::runtime_error("malformed PGM header");
  }
  long value = 0;
  while (pos < bytes.size() && std::isdigit(bytes[pos])) {
    value = value * 10 + (bytes[pos] - '0');
    if (value > 1000000000L) throw std::runtime_error("malformed PGM header");
    ++pos;
  }
  return value;
}

}  // namespace

GrayImage decode_pgm(std::span<const uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw std::runtime_error("malformed PGM header");
  }
  if (bytes[1] == '6' || bytes[1] == '3') {
    throw std::runtime_error("color PPM images are not supported");
  }
  if (bytes[1] != '5') {
    throw std::runtime_error("unsupported PNM type: only binary PGM (P5) is readable");
  }
  size_t pos = 2;
  long w = pgm_token(bytes, pos);
  long h = pgm_token(bytes, pos);
  long maxval = pgm_token(bytes, pos);
  if (w < 1 || h < 1) throw std::runtime_error("malformed PGM header");
  if (maxval != 255) {
    throw std::runtime_error("unsupported PGM depth: maxval must be 255 (8-bit)");
  }
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
    throw std::runtime_error("malformed PGM header");
  }
  ++pos;  // single whitespace separates header from pixel data
  size_t need = static_cast<size_t>(w) * static_cast<size_t>(h);
  if (bytes.size() - pos < need) {
    throw std::runtime_error("unexpected end of pixel data");
  }
  GrayImage img = make_image(static_cast<int>(w), static_cast<int>(h));
  std::memcpy(img.pixels.data(), bytes.data() + pos, need);
  return img;
}

std::vector<uint8_t> encode_pgm(const GrayImage& img) {
  std::string header = "P5\n" + std::to_string(img.width) + " " +
                       std::to_string(img.height) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

GrayImage read_image(const std::filesystem::path& path) {
  std::vector<uint8_t> bytes = read_file_bytes(path);
  if (bytes.size() >= 4 && bytes[0] == 0x89 && bytes[1] == 'P' &&
      bytes[2] == 'N' && bytes[3] == 'G') {
    return decode_png(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P') {
    return decode_pgm(bytes);
  }
  throw std::runtime_error("unsupported image format (expected PGM P5 or PNG): " +
                           path.string());
}

void write_image(const GrayImage& img, const std::filesystem::path& path) {
  write_file_bytes(path, encode_pgm(img));
}

GrayImage resize_image(const GrayImage& img, int w, int h) {
  if (w < 1 || h < 1) {
    throw std::runtime_error("resize target must be at least 1x1");
  }
  if (w == img.width && h == img.height) return img;
  GrayImage out = make_image(w, h);
  const double sx = static_cast<double>(img.width) / w;
  const double sy = static_cast<double>(img.height) / h;
  for (int yd = 0; yd < h; ++yd) {
    double src_y = (yd + 0.5) * sy - 0.5;
    src_y = std::clamp(src_y, 0.0, static_cast<double>(img.height - 1));
    int y0 = static_cast<int>(std::floor(src_y));
    int y1 = std::min(y0 + 1, img.height - 1);
    double fy = src_y - y0;
    for (int xd = 0; xd < w; ++xd) {
      double src_x = (xd + 0.5) * sx - 0.5;
      src_x = std::clamp(src_x, 0.0, static_cast<double>(img.width - 1));
      int x0 = static_cast<int>(std::floor(src_x));
      int x1 = std::min(x0 + 1, img.width - 1);
      double fx = src_x - x0;
      double v = (1 - fy) * ((1 - fx) * img.at(y0, x0) + fx * img.at(y0, x1)) +
                 fy * ((1 - fx) * img.at(y1, x0) + fx * img.at(y1, x1));
      v = std::clamp(v, 0.0, 255.0);
      out.at(yd, xd) = static_cast<uint8_t>(std::lround(v));
    }
  }
  return out;
}

}  // namespace dfsmc
