#pragma once

#include <string>

#include "pansharp/band.hpp"

namespace pansharp {

// Netpbm graymap/pixmap, plain (P2/P3) and binary (P5/P6), maxval 255 only.
enum class PnmFormat { pgm_plain, ppm_plain, pgm_binary, ppm_binary };

// Parse a whole file held in memory; the variant is taken from the magic token.
// Graymaps decode to one band, pixmaps to three (R, G, B order).
Image decode_image(const std::string& bytes);

// Quantizes first, then serializes. Graymap formats need 1 band, pixmap 3.
std::string encode_image(const Image& img, PnmFormat format);

// Binary format matching the band count (P5 for 1 band, P6 for 3).
PnmFormat binary_format_for(const Image& img);

Image load_image(const std::string& path);

// Canonical binary encoding, written to a temporary and renamed into place so
// a failure never leaves a truncated file.
void save_image(const std::string& path, const Image& img);

void write_file_atomic(const std::string& path, const std::string& bytes);

}  // namespace pansharp
