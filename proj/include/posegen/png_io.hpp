#pragma once

#include "posegen/image.hpp"

#include <string>

namespace posegen {

// 8-bit PNG IO via libpng. Writing uses fixed zlib settings so that identical
// pixel data yields identical bytes on disk.
void write_png_rgb(const std::string& path, const ImageRGB& image);
void write_png_gray(const std::string& path, const ImageGray& image);

// Reads an 8-bit PNG (RGB, RGBA, gray, or palette) as RGB in [0, 1].
ImageRGB read_png_rgb(const std::string& path);

}  // namespace posegen
