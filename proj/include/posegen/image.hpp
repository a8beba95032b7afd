#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace posegen {

// Row-major float image, pixel origin top-left. Values nominally in [0, 1].
template <int Channels>
struct Image {
  int width = 0;
  int height = 0;
  std::vector<float> data;  // height * width * Channels

  Image() = default;
  Image(int w, int h, float fill = 0.0f) : width(w), height(h), data(size_t(w) * h * Channels, fill) {}

  float* at(int x, int y) { return data.data() + (size_t(y) * width + x) * Channels; }
  const float* at(int x, int y) const { return data.data() + (size_t(y) * width + x) * Channels; }

  size_t pixel_count() const { return size_t(width) * height; }
  bool empty() const { return data.empty(); }
};

using ImageRGB = Image<3>;
using ImageGray = Image<1>;

inline uint8_t to_byte(float v) {
  if (v <= 0.0f) return 0;
  if (v >= 1.0f) return 255;
  return uint8_t(v * 255.0f + 0.5f);
}

}  // namespace posegen
