#include "ccbench/png_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <memory>
#include <string>

#include "ccbench/error.hpp"

namespace ccbench {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const noexcept { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  return FilePtr(std::fopen(path.c_str(), mode));
}

class PngReader {
 public:
  PngReader() {
    png_ = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (png_) info_ = png_create_info_struct(png_);
  }
  ~PngReader() { png_destroy_read_struct(&png_, &info_, nullptr); }
  PngReader(const PngReader&) = delete;
  PngReader& operator=(const PngReader&) = delete;

  png_structp png_ = nullptr;
  png_infop info_ = nullptr;
};

class PngWriter {
 public:
  PngWriter() {
    png_ = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (png_) info_ = png_create_info_struct(png_);
  }
  ~PngWriter() { png_destroy_write_struct(&png_, &info_); }
  PngWriter(const PngWriter&) = delete;
  PngWriter& operator=(const PngWriter&) = delete;

  png_structp png_ = nullptr;
  png_infop info_ = nullptr;
};

// Rows are decoded into a plain buffer first so no C++ object with a
// destructor lives across the setjmp boundary.
bool decode(std::FILE* file, png_structp png, png_infop info, Rgb16Image& out,
            std::vector<png_byte>& buffer, std::vector<png_bytep>& rows) {
  if (setjmp(png_jmpbuf(png))) return false;
  png_init_io(png, file);
  png_read_info(png, info);

  const png_byte color_type = png_get_color_type(png, info);
  const png_byte bit_depth = png_get_bit_depth(png, info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
    if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    png_set_gray_to_rgb(png);
  }
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (bit_depth == 16) png_set_swap(png);  // little-endian host order
  png_read_update_info(png, info);

  out.width = png_get_image_width(png, info);
  out.height = png_get_image_height(png, info);
  const std::size_t rowbytes = png_get_rowbytes(png, info);
  buffer.resize(rowbytes * out.height);
  rows.resize(out.height);
  for (std::size_t y = 0; y < out.height; ++y) rows[y] = buffer.data() + y * rowbytes;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);

  const bool wide = png_get_bit_depth(png, info) == 16;
  out.samples.resize(out.width * out.height * 3);
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    if (wide) {
      out.samples[i] = static_cast<std::uint16_t>(buffer[2 * i] | (buffer[2 * i + 1] << 8));
    } else {
      out.samples[i] = static_cast<std::uint16_t>(buffer[i] * 257);
    }
  }
  return true;
}

bool encode(std::FILE* file, png_structp png, png_infop info, std::size_t width,
            std::size_t height, int bit_depth, const png_byte* data) {
  if (setjmp(png_jmpbuf(png))) return false;
  png_init_io(png, file);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height),
               bit_depth, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  if (bit_depth == 16) png_set_swap(png);
  const std::size_t rowbytes = width * 3 * static_cast<std::size_t>(bit_depth / 8);
  for (std::size_t y = 0; y < height; ++y) {
    png_write_row(png, const_cast<png_bytep>(data + y * rowbytes));
  }
  png_write_end(png, nullptr);
  return true;
}

void write_png(const std::filesystem::path& path, std::size_t width, std::size_t height,
               int bit_depth, const png_byte* data) {
  FilePtr file = open_file(path, "wb");
  if (!file) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  PngWriter writer;
  if (!writer.png_ || !writer.info_ ||
      !encode(file.get(), writer.png_, writer.info_, width, height, bit_depth, data)) {
    throw Error(ErrorCode::IoError, "failed to encode " + path.string());
  }
}

}  // namespace

Rgb16Image read_png_rgb16(const std::filesystem::path& path) {
  FilePtr file = open_file(path, "rb");
  if (!file) throw Error(ErrorCode::MissingFile, "cannot open " + path.string());

  png_byte signature[8];
  if (std::fread(signature, 1, 8, file.get()) != 8 || png_sig_cmp(signature, 0, 8) != 0) {
    throw Error(ErrorCode::CorruptRaster, path.string() + " is not a PNG file");
  }
  PngReader reader;
  if (!reader.png_ || !reader.info_) throw Error(ErrorCode::CorruptRaster, "libpng init failed");
  png_set_sig_bytes(reader.png_, 8);

  Rgb16Image image;
  std::vector<png_byte> buffer;
  std::vector<png_bytep> rows;
  if (!decode(file.get(), reader.png_, reader.info_, image, buffer, rows)) {
    throw Error(ErrorCode::CorruptRaster, "failed to decode " + path.string());
  }
  if (image.width == 0 || image.height == 0) {
    throw Error(ErrorCode::CorruptRaster, path.string() + " has zero size");
  }
  return image;
}

void write_png_rgb16(const std::filesystem::path& path, const Rgb16Image& image) {
  std::vector<png_byte> bytes(image.samples.size() * 2);
  for (std::size_t i = 0; i < image.samples.size(); ++i) {
    bytes[2 * i] = static_cast<png_byte>(image.samples[i] & 0xff);
    bytes[2 * i + 1] = static_cast<png_byte>(image.samples[i] >> 8);
  }
  write_png(path, image.width, image.height, 16, bytes.data());
}

void write_png_rgb8(const std::filesystem::path& path, std::size_t width, std::size_t height,
                    std::span<const std::uint8_t> samples) {
  write_png(path, width, height, 8, samples.data());
}

}  // namespace ccbench
