#pragma once

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "advmit/errors.hpp"
#include "advmit/image.hpp"

namespace advmit {

inline std::uint8_t sample_to_byte(double s) {
  double r = std::llround(s);
  return static_cast<std::uint8_t>(std::clamp(r, 0.0, 255.0));
}

namespace detail {

inline std::string lowercase_extension(const std::string& path) {
  auto dot = path.find_last_of('.');
  if (dot == std::string::npos) return "";
  std::string ext = path.substr(dot + 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext;
}

// Skips PNM whitespace and '#' comments, then reads one unsigned integer.
inline long long read_pnm_token(std::istream& in) {
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (!std::isspace(c)) {
      break;
    }
    c = in.get();
  }
  if (c == EOF || !std::isdigit(c)) {
    throw FormatError("malformed PNM header");
  }
  long long value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > (1LL << 40)) throw FormatError("PNM header value too large");
    c = in.get();
  }
  if (c != EOF) in.unget();
  return value;
}

inline ImageBuffer load_pnm(std::ifstream& in, const std::string& path) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  const int channels = (magic[1] == '6') ? 3 : 1;
  const long long width = read_pnm_token(in);
  const long long height = read_pnm_token(in);
  const long long maxval = read_pnm_token(in);
  if (width < 1 || height < 1) {
    throw FormatError("PNM with zero dimension: " + path);
  }
  if (maxval != 255) {
    throw FormatError("only 8-bit PNM supported: " + path);
  }
  in.get();  // single whitespace byte separating header from raster
  const std::size_t count =
      static_cast<std::size_t>(width) * height * channels;
  std::vector<std::uint8_t> bytes(count);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(count));
  if (static_cast<std::size_t>(in.gcount()) != count) {
    throw IoError("truncated PNM file: " + path);
  }
  ImageBuffer img(static_cast<int>(width), static_cast<int>(height), channels);
  for (std::size_t i = 0; i < count; ++i) {
    img.samples()[i] = static_cast<double>(bytes[i]);
  }
  return img;
}

inline ImageBuffer load_png(const std::string& path) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&image, path.c_str())) {
    throw IoError("cannot read PNG: " + path + ": " + image.message);
  }
  const bool color = (image.format & PNG_FORMAT_FLAG_COLOR) != 0;
  image.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const int channels = color ? 3 : 1;
  std::vector<std::uint8_t> bytes(PNG_IMAGE_SIZE(image));
  if (!png_image_finish_read(&image, nullptr, bytes.data(), 0, nullptr)) {
    std::string message = image.message;
    png_image_free(&image);
    throw IoError("cannot decode PNG: " + path + ": " + message);
  }
  ImageBuffer img(static_cast<int>(image.width),
                  static_cast<int>(image.height), channels);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    img.samples()[i] = static_cast<double>(bytes[i]);
  }
  return img;
}

inline void save_pnm(const ImageBuffer& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  out << (img.channels() == 3 ? "P6" : "P5") << "\n"
      << img.width() << " " << img.height() << "\n255\n";
  std::vector<std::uint8_t> bytes(img.sample_count());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = sample_to_byte(img.samples()[i]);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

inline void save_png(const ImageBuffer& img, const std::string& path) {
  png_image image;
  std::memset(&image, 0, sizeof(image));
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width());
  image.height = static_cast<png_uint_32>(img.height());
  image.format = img.channels() == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<std::uint8_t> bytes(img.sample_count());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = sample_to_byte(img.samples()[i]);
  }
  if (!png_image_write_to_file(&image, path.c_str(), 0, bytes.data(), 0,
                               nullptr)) {
    throw IoError("cannot write PNG: " + path + ": " + image.message);
  }
}

}  // namespace detail

/// Loads a PNG, binary PPM (P6), or binary PGM (P5) file. The format is
/// detected from the file's magic bytes, not its extension. 8-bit sources
/// map losslessly onto [0, 255] samples.
inline ImageBuffer load_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open image: " + path);
  }
  char magic[8] = {0};
  in.read(magic, sizeof(magic));
  if (in.gcount() >= 2 && magic[0] == 'P' && (magic[1] == '5' || magic[1] == '6')) {
    in.clear();
    in.seekg(0);
    return detail::load_pnm(in, path);
  }
  static const unsigned char png_sig[4] = {0x89, 'P', 'N', 'G'};
  if (in.gcount() >= 4 && std::memcmp(magic, png_sig, 4) == 0) {
    in.close();
    return detail::load_png(path);
  }
  throw FormatError("unsupported image format: " + path);
}

/// Saves as PNG, PPM, or PGM depending on the file extension. Samples are
/// rounded to the nearest 8-bit value; load_image(save_image(x)) == round(x).
inline void save_image(const ImageBuffer& img, const std::string& path) {
  const std::string ext = detail::lowercase_extension(path);
  if (ext == "png") {
    detail::save_png(img, path);
  } else if (ext == "ppm") {
    if (img.channels() != 3) {
      throw FormatError("PPM requires 3 channels: " + path);
    }
    detail::save_pnm(img, path);
  } else if (ext == "pgm") {
    if (img.channels() != 1) {
      throw FormatError("PGM requires 1 channel: " + path);
    }
    detail::save_pnm(img, path);
  } else {
    throw FormatError("unsupported output extension: " + path);
  }
}

}  // namespace advmit
