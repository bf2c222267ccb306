// Copyright 2026 The HeartSpot Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "heartspot/image_io.hpp"

#include <png.h>
// jpeglib.h needs FILE and size_t declared first.
#include <cstdio>
#include <jpeglib.h>

#include <algorithm>
#include <csetjmp>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

namespace heartspot {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid argument";
    case ErrorKind::kDecode: return "decode error";
    case ErrorKind::kEncode: return "encode error";
    case ErrorKind::kDimension: return "dimension error";
    case ErrorKind::kShape: return "shape error";
    case ErrorKind::kEmptyMask: return "empty-mask error";
    case ErrorKind::kDegenerate: return "degenerate-threshold error";
    case ErrorKind::kIntegrity: return "integrity error";
    case ErrorKind::kFormat: return "format error";
    case ErrorKind::kCorruption: return "corruption error";
    case ErrorKind::kIo: return "io error";
  }
  return "error";
}

ImageF to_float(const Image8& img) {
  std::vector<float> out(img.size());
  std::transform(img.samples().begin(), img.samples().end(), out.begin(),
                 [](std::uint8_t v) { return static_cast<float>(v) / 255.0f; });
  return ImageF(img.height(), img.width(), std::move(out));
}

Image8 to_u8(const ImageF& img) {
  std::vector<std::uint8_t> out(img.size());
  std::transform(img.samples().begin(), img.samples().end(), out.begin(),
                 [](float v) {
                   const float c = std::clamp(v, 0.0f, 1.0f);
                   return static_cast<std::uint8_t>(std::lround(c * 255.0f));
                 });
  return Image8(img.height(), img.width(), std::move(out));
}

namespace {

constexpr std::uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G',
                                          '\r', '\n', 0x1a, '\n'};

bool is_png(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0;
}

bool is_jpeg(std::span<const std::uint8_t> bytes) {
  return bytes.size() >= 3 && bytes[0] == 0xFF && bytes[1] == 0xD8 &&
         bytes[2] == 0xFF;
}

// BT.601 luma in fixed point; exact round-half-up of 0.299R + 0.587G + 0.114B.
std::uint32_t luma(std::uint32_t r, std::uint32_t g, std::uint32_t b) {
  const std::uint64_t weighted = 299ull * r + 587ull * g + 114ull * b;
  return static_cast<std::uint32_t>((weighted + 500) / 1000);
}

// Decoded raster with up to 16 bits per channel, before grayscale collapse.
struct RawRaster {
  std::size_t height = 0;
  std::size_t width = 0;
  int channels = 0;  // 1 gray, 2 gray+alpha, 3 rgb, 4 rgba
  int bit_depth = 8;
  std::vector<std::uint16_t> samples;

  std::vector<std::uint32_t> gray() const {
    std::vector<std::uint32_t> out(height * width);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const std::uint16_t* px = &samples[i * channels];
      out[i] = channels >= 3 ? luma(px[0], px[1], px[2]) : px[0];
    }
    return out;
  }
};

struct PngReadState {
  std::span<const std::uint8_t> bytes;
  std::size_t offset = 0;
  const char* stage = "signature";
};

void png_read_from_span(png_structp png, png_bytep out, png_size_t count) {
  auto* state = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (state->offset + count > state->bytes.size()) {
    png_error(png, "unexpected end of data");
  }
  std::memcpy(out, state->bytes.data() + state->offset, count);
  state->offset += count;
}

void png_error_handler(png_structp png, png_const_charp message) {
  auto* what = static_cast<std::string*>(png_get_error_ptr(png));
  *what = message;
  png_longjmp(png, 1);
}

void png_warning_handler(png_structp, png_const_charp) {}

RawRaster decode_png_raw(std::span<const std::uint8_t> bytes) {
  std::string what;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &what,
                                           png_error_handler,
                                           png_warning_handler);
  if (png == nullptr) {
    throw Error(ErrorKind::kDecode, "png: cannot allocate reader");
  }
  png_infop info = png_create_info_struct(png);
  PngReadState state{bytes};
  RawRaster raster;
  std::vector<png_bytep> rows;
  std::vector<std::uint8_t> buffer;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(ErrorKind::kDecode,
                std::string("png: ") + state.stage + " stage failed: " + what);
  }
  if (info == nullptr) png_error(png, "cannot allocate info");

  png_set_read_fn(png, &state, png_read_from_span);
  state.stage = "header";
  png_read_info(png, info);

  const int color_type = png_get_color_type(png, info);
  int bit_depth = png_get_bit_depth(png, info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
  }
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (bit_depth == 16) png_set_swap(png);  // host little-endian reads below
  png_read_update_info(png, info);

  raster.height = png_get_image_height(png, info);
  raster.width = png_get_image_width(png, info);
  raster.channels = png_get_channels(png, info);
  bit_depth = png_get_bit_depth(png, info);
  raster.bit_depth = bit_depth;
  const std::size_t rowbytes = png_get_rowbytes(png, info);
  buffer.resize(rowbytes * raster.height);
  rows.resize(raster.height);
  for (std::size_t r = 0; r < raster.height; ++r) {
    rows[r] = buffer.data() + r * rowbytes;
  }
  state.stage = "pixel data";
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  const std::size_t count = raster.height * raster.width * raster.channels;
  raster.samples.resize(count);
  if (bit_depth == 16) {
    for (std::size_t i = 0; i < count; ++i) {
      raster.samples[i] = static_cast<std::uint16_t>(buffer[2 * i] |
                                                     (buffer[2 * i + 1] << 8));
    }
  } else {
    std::copy(buffer.begin(), buffer.begin() + count, raster.samples.begin());
  }
  return raster;
}

struct JpegErrorManager {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<JpegErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

void jpeg_silent(j_common_ptr) {}

RawRaster decode_jpeg_raw(std::span<const std::uint8_t> bytes) {
  jpeg_decompress_struct cinfo{};
  JpegErrorManager err{};
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = jpeg_error_exit;
  err.pub.output_message = jpeg_silent;
  const char* volatile stage = "header";
  RawRaster raster;
  std::vector<std::uint8_t> line;

  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw Error(ErrorKind::kDecode, std::string("jpeg: ") + stage +
                                        " stage failed: " + err.message);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_mem_src(&cinfo, bytes.data(), static_cast<unsigned long>(bytes.size()));
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space =
      cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
  stage = "decompress";
  jpeg_start_decompress(&cinfo);
  raster.height = cinfo.output_height;
  raster.width = cinfo.output_width;
  raster.channels = cinfo.output_components;
  line.resize(raster.width * raster.channels);
  raster.samples.reserve(raster.height * line.size());
  stage = "scanline";
  while (cinfo.output_scanline < cinfo.output_height) {
    JSAMPROW row = line.data();
    jpeg_read_scanlines(&cinfo, &row, 1);
    raster.samples.insert(raster.samples.end(), line.begin(), line.end());
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return raster;
}

RawRaster decode_raw(std::span<const std::uint8_t> bytes) {
  if (is_png(bytes)) return decode_png_raw(bytes);
  if (is_jpeg(bytes)) return decode_jpeg_raw(bytes);
  throw Error(ErrorKind::kDecode,
              "signature stage failed: neither PNG nor JPEG");
}

struct PngWriteState {
  Bytes out;
};

void png_write_to_vector(png_structp png, png_bytep data, png_size_t count) {
  auto* state = static_cast<PngWriteState*>(png_get_io_ptr(png));
  state->out.insert(state->out.end(), data, data + count);
}

void png_flush_noop(png_structp) {}

Bytes encode_png_gray(std::size_t height, std::size_t width, int bit_depth,
                      const std::vector<std::uint8_t>& packed_rows) {
  std::string what;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &what,
                                            png_error_handler,
                                            png_warning_handler);
  if (png == nullptr) throw Error(ErrorKind::kEncode, "png: cannot allocate");
  png_infop info = png_create_info_struct(png);
  PngWriteState state;
  const std::size_t rowbytes = width * (bit_depth / 8);
  std::vector<png_bytep> rows(height);

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorKind::kEncode, "png: " + what);
  }
  if (info == nullptr) png_error(png, "cannot allocate info");
  png_set_write_fn(png, &state, png_write_to_vector, png_flush_noop);
  png_set_IHDR(png, info, static_cast<png_uint_32>(width),
               static_cast<png_uint_32>(height), bit_depth,
               PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t r = 0; r < height; ++r) {
    rows[r] = const_cast<png_bytep>(packed_rows.data() + r * rowbytes);
  }
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return std::move(state.out);
}

}  // namespace

Image8 decode_image(std::span<const std::uint8_t> bytes) {
  const RawRaster raster = decode_raw(bytes);
  std::vector<std::uint32_t> gray = raster.gray();
  std::vector<std::uint8_t> out(gray.size());
  if (raster.bit_depth == 16) {
    std::transform(gray.begin(), gray.end(), out.begin(), [](std::uint32_t v) {
      return static_cast<std::uint8_t>((v * 255u + 32767u) / 65535u);
    });
  } else {
    std::transform(gray.begin(), gray.end(), out.begin(), [](std::uint32_t v) {
      return static_cast<std::uint8_t>(v);
    });
  }
  return Image8(raster.height, raster.width, std::move(out));
}

ImageF decode_saliency(std::span<const std::uint8_t> bytes) {
  const RawRaster raster = decode_raw(bytes);
  const float scale = raster.bit_depth == 16 ? 65535.0f : 255.0f;
  std::vector<std::uint32_t> gray = raster.gray();
  std::vector<float> out(gray.size());
  std::transform(gray.begin(), gray.end(), out.begin(),
                 [scale](std::uint32_t v) { return v / scale; });
  return ImageF(raster.height, raster.width, std::move(out));
}

Bytes encode_png(const Image8& img) {
  if (img.empty()) throw Error(ErrorKind::kEncode, "png: empty image");
  return encode_png_gray(img.height(), img.width(), 8,
                         std::vector<std::uint8_t>(img.samples().begin(),
                                                   img.samples().end()));
}

Bytes encode_png16(const ImageF& img) {
  if (img.empty()) throw Error(ErrorKind::kEncode, "png: empty image");
  std::vector<std::uint8_t> packed(img.size() * 2);
  for (std::size_t i = 0; i < img.size(); ++i) {
    const float c = std::clamp(img.samples()[i], 0.0f, 1.0f);
    const auto v = static_cast<std::uint16_t>(std::lround(c * 65535.0f));
    packed[2 * i] = static_cast<std::uint8_t>(v >> 8);  // PNG is big-endian
    packed[2 * i + 1] = static_cast<std::uint8_t>(v & 0xFF);
  }
  return encode_png_gray(img.height(), img.width(), 16, packed);
}

Bytes encode_jpeg(const Image8& img, int quality) {
  if (img.empty()) throw Error(ErrorKind::kEncode, "jpeg: empty image");
  if (quality < 1 || quality > 100) {
    throw Error(ErrorKind::kInvalidArgument,
                "jpeg quality must be in [1, 100], got " +
                    std::to_string(quality));
  }
  jpeg_compress_struct cinfo{};
  JpegErrorManager err{};
  cinfo.err = jpeg_std_error(&err.pub);
  err.pub.error_exit = jpeg_error_exit;
  err.pub.output_message = jpeg_silent;
  unsigned char* buffer = nullptr;
  unsigned long size = 0;

  if (setjmp(err.jump)) {
    jpeg_destroy_compress(&cinfo);
    std::free(buffer);
    throw Error(ErrorKind::kEncode, std::string("jpeg: ") + err.message);
  }
  jpeg_create_compress(&cinfo);
  jpeg_mem_dest(&cinfo, &buffer, &size);
  cinfo.image_width = static_cast<JDIMENSION>(img.width());
  cinfo.image_height = static_cast<JDIMENSION>(img.height());
  cinfo.input_components = 1;
  cinfo.in_color_space = JCS_GRAYSCALE;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, quality, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  while (cinfo.next_scanline < cinfo.image_height) {
    JSAMPROW row = const_cast<JSAMPROW>(img.row(cinfo.next_scanline).data());
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  Bytes out(buffer, buffer + size);
  jpeg_destroy_compress(&cinfo);
  std::free(buffer);
  return out;
}

Bytes encode_image(const Image8& img, ImageFormat format) {
  switch (format.kind) {
    case ImageFormat::Kind::kPng: return encode_png(img);
    case ImageFormat::Kind::kJpeg: return encode_jpeg(img, format.quality);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown image format");
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in),
               std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

}  // namespace heartspot
