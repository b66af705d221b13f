#pragma once

// Minimal PNG writer for 8-bit RGB images, deflated through zlib. Output
// is fully deterministic for a given raster: fixed chunk layout, filter
// type 0 on every scanline, compress2 at the default level.

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <zlib.h>

#include "pentoref/boardgen.hpp"

namespace pentoref {
namespace detail {

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v));
}

inline void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
                      const std::uint8_t* data, std::size_t size) {
  put_u32(out, static_cast<std::uint32_t>(size));
  const std::size_t start = out.size();
  out.insert(out.end(), type, type + 4);
  if (size != 0) out.insert(out.end(), data, data + size);
  std::uint32_t crc = static_cast<std::uint32_t>(
      ::crc32(0L, out.data() + start, static_cast<uInt>(4 + size)));
  put_u32(out, crc);
}

}  // namespace detail

inline std::vector<std::uint8_t> encode_png(const BoardImage& image) {
  if (image.width <= 0 || image.height <= 0 ||
      image.rgb.size() != static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height) * 3) {
    throw std::invalid_argument("encode_png: raster size mismatch");
  }

  // One filter byte (0 = None) in front of each scanline.
  const std::size_t stride = static_cast<std::size_t>(image.width) * 3;
  std::vector<std::uint8_t> raw((stride + 1) * static_cast<std::size_t>(image.height));
  for (int y = 0; y < image.height; ++y) {
    std::uint8_t* line = raw.data() + static_cast<std::size_t>(y) * (stride + 1);
    line[0] = 0;
    std::memcpy(line + 1, image.rgb.data() + static_cast<std::size_t>(y) * stride, stride);
  }

  uLongf bound = ::compressBound(static_cast<uLong>(raw.size()));
  std::vector<std::uint8_t> deflated(bound);
  if (::compress2(deflated.data(), &bound, raw.data(), static_cast<uLong>(raw.size()),
                  Z_DEFAULT_COMPRESSION) != Z_OK) {
    throw std::runtime_error("encode_png: deflate failed");
  }
  deflated.resize(bound);

  std::vector<std::uint8_t> out;
  out.reserve(deflated.size() + 128);
  static constexpr std::uint8_t kSignature[8] = {137, 80, 78, 71, 13, 10, 26, 10};
  out.insert(out.end(), kSignature, kSignature + 8);

  std::uint8_t ihdr[13];
  ihdr[0] = static_cast<std::uint8_t>(image.width >> 24);
  ihdr[1] = static_cast<std::uint8_t>(image.width >> 16);
  ihdr[2] = static_cast<std::uint8_t>(image.width >> 8);
  ihdr[3] = static_cast<std::uint8_t>(image.width);
  ihdr[4] = static_cast<std::uint8_t>(image.height >> 24);
  ihdr[5] = static_cast<std::uint8_t>(image.height >> 16);
  ihdr[6] = static_cast<std::uint8_t>(image.height >> 8);
  ihdr[7] = static_cast<std::uint8_t>(image.height);
  ihdr[8] = 8;   // bit depth
  ihdr[9] = 2;   // color type: truecolor
  ihdr[10] = ihdr[11] = ihdr[12] = 0;  // deflate, adaptive filters, no interlace
  detail::put_chunk(out, "IHDR", ihdr, sizeof ihdr);
  detail::put_chunk(out, "IDAT", deflated.data(), deflated.size());
  detail::put_chunk(out, "IEND", nullptr, 0);
  return out;
}

inline void write_png(const std::string& path, const BoardImage& image) {
  const std::vector<std::uint8_t> bytes = encode_png(image);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("write_png: cannot open " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write_png: short write to " + path);
}

// Decoder sufficient for round-trip tests of our own output: 8-bit RGB,
// filter 0 scanlines, single IDAT run.
inline BoardImage decode_png(const std::vector<std::uint8_t>& bytes) {
  auto fail = [](const std::string& why) -> BoardImage {
    throw std::runtime_error("decode_png: " + why);
  };
  static constexpr std::uint8_t kSignature[8] = {137, 80, 78, 71, 13, 10, 26, 10};
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kSignature, 8) != 0) {
    return fail("bad signature");
  }
  auto read_u32 = [&](std::size_t pos) {
    return (static_cast<std::uint32_t>(bytes[pos]) << 24) |
           (static_cast<std::uint32_t>(bytes[pos + 1]) << 16) |
           (static_cast<std::uint32_t>(bytes[pos + 2]) << 8) |
           static_cast<std::uint32_t>(bytes[pos + 3]);
  };

  BoardImage img;
  std::vector<std::uint8_t> idat;
  std::size_t pos = 8;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t len = read_u32(pos);
    const std::string type(bytes.begin() + static_cast<std::ptrdiff_t>(pos) + 4,
                           bytes.begin() + static_cast<std::ptrdiff_t>(pos) + 8);
    if (pos + 12 + len > bytes.size()) return fail("truncated chunk");
    const std::uint8_t* data = bytes.data() + pos + 8;
    if (type == "IHDR") {
      if (len != 13) return fail("bad IHDR");
      img.width = static_cast<int>(read_u32(pos + 8));
      img.height = static_cast<int>(read_u32(pos + 12));
      if (data[8] != 8 || data[9] != 2 || data[12] != 0) {
        return fail("unsupported format");
      }
    } else if (type == "IDAT") {
      idat.insert(idat.end(), data, data + len);
    } else if (type == "IEND") {
      break;
    }
    pos += 12 + len;
  }
  if (img.width <= 0 || img.height <= 0) return fail("missing IHDR");

  const std::size_t stride = static_cast<std::size_t>(img.width) * 3;
  std::vector<std::uint8_t> raw((stride + 1) * static_cast<std::size_t>(img.height));
  uLongf raw_size = static_cast<uLongf>(raw.size());
  if (::uncompress(raw.data(), &raw_size, idat.data(), static_cast<uLong>(idat.size())) != Z_OK ||
      raw_size != raw.size()) {
    return fail("inflate failed");
  }
  img.rgb.resize(stride * static_cast<std::size_t>(img.height));
  for (int y = 0; y < img.height; ++y) {
    const std::uint8_t* line = raw.data() + static_cast<std::size_t>(y) * (stride + 1);
    if (line[0] != 0) return fail("unsupported filter");
    std::memcpy(img.rgb.data() + static_cast<std::size_t>(y) * stride, line + 1, stride);
  }
  return img;
}

inline BoardImage read_png(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("read_png: cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  return decode_png(bytes);
}

}  // namespace pentoref
