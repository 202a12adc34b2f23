#include <png.h>

#include <csetjmp>
#include <cstring>
#include <stdexcept>
#include <string>

#include "dfsmc/image.hpp"

namespace dfsmc {

namespace {

struct MemReader {
  const uint8_t* data;
  size_t size;
  size_t pos;
};

void mem_read(png_structp png, png_bytep out, png_size_t count) {
  auto* r = static_cast<MemReader*>(png_get_io_ptr(png));
  if (r->pos + count > r->size) {
    png_error(png, "unexpected end of PNG data");
  }
  std::memcpy(out, r->data + r->pos, count);
  r->pos += count;
}

void on_error(png_structp png, png_const_charp msg) {
  auto* err = static_cast<std::string*>(png_get_error_ptr(png));
  *err = msg ? msg : "PNG decode error";
  longjmp(png_jmpbuf(png), 1);
}

void on_warning(png_structp, png_const_charp) {}

}  // namespace

GrayImage decode_png(std::span<const uint8_t> bytes) {
  std::string error_msg;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error_msg,
                                           on_error, on_warning);
  if (!png) throw std::runtime_error("PNG decoder initialization failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw std::runtime_error("PNG decoder initialization failed");
  }

  GrayImage img;
  std::vector<png_bytep> row_ptrs;
  MemReader reader{bytes.data(), bytes.size(), 0};

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("PNG decode error: " + error_msg);
  }

  png_set_read_fn(png, &reader, mem_read);
  png_read_info(png, info);

  png_uint_32 width = png_get_image_width(png, info);
  png_uint_32 height = png_get_image_height(png, info);
  int bit_depth = png_get_bit_depth(png, info);
  int color_type = png_get_color_type(png, info);

  if (color_type != PNG_COLOR_TYPE_GRAY) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("PNG decode error: color images are not supported, "
                             "expected 8-bit grayscale");
  }
  if (bit_depth != 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("PNG decode error: bit depth " +
                             std::to_string(bit_depth) +
                             " not supported, expected 8-bit grayscale");
  }
  if (width < 1 || height < 1 || width > (1u << 24) || height > (1u << 24)) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw std::runtime_error("PNG decode error: bad dimensions");
  }

  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  img = make_image(static_cast<int>(width), static_cast<int>(height));
  row_ptrs.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    row_ptrs[y] = img.pixels.data() + static_cast<size_t>(y) * width;
  }
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

}  // namespace dfsmc
