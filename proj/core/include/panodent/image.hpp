#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "panodent/errors.hpp"

namespace panodent {

// Grayscale raster, row-major, intensities in [0, 1].
struct Image {
  int width = 0;
  int height = 0;
  std::vector<float> px;

  Image() = default;
  Image(int w, int h, float fill = 0.0f)
      : width(w), height(h), px(static_cast<size_t>(w) * h, fill) {}

  float& at(int x, int y) { return px[static_cast<size_t>(y) * width + x]; }
  float at(int x, int y) const { return px[static_cast<size_t>(y) * width + x]; }
  size_t size() const { return px.size(); }

  float mean() const;
  void clamp01();
};

// Reads PNG or JPEG as 8-bit grayscale, scaled to [0, 1].
Image load_image_gray(const std::filesystem::path& path);

// Writes an 8-bit grayscale PNG (values clamped and rounded from [0, 1]).
void save_image_gray(const Image& img, const std::filesystem::path& path);

// Binary masks: nonzero pixels load as 1. Saved as bilevel PNG.
Image load_mask(const std::filesystem::path& path);
void save_mask(const Image& mask, const std::filesystem::path& path);

// Applies the forward affine map M (row-major 2x3: dst = M * [x y 1]^T) to the
// pixels, bilinear interpolation, out-of-range filled with `fill`.
Image warp_affine(const Image& img, const std::array<double, 6>& M, float fill);

// Bilinear resample of the continuous source rect [x0,x1)x[y0,y1) to out_w x out_h.
Image resample_region(const Image& img, double x0, double y0, double x1, double y1,
                      int out_w, int out_h);

// Same region extraction with nearest-neighbour sampling (keeps masks binary).
Image resample_region_nearest(const Image& img, double x0, double y0, double x1,
                              double y1, int out_w, int out_h);

}  // namespace panodent
