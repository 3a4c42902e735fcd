#include "panodent/augment.hpp"

#include <algorithm>
#include <cmath>

namespace panodent {

ToothLabel hflip_label(const ToothLabel& label) {
  static constexpr int kMirror[5] = {0, 2, 1, 4, 3};
  return ToothLabel{kMirror[label.quadrant], label.index};
}

Sample hflip(const Sample& s) {
  Sample out;
  out.image = Image(s.image.width, s.image.height);
  const int w = s.image.width;
  for (int y = 0; y < s.image.height; ++y) {
    for (int x = 0; x < w; ++x) {
      out.image.at(x, y) = s.image.at(w - 1 - x, y);
    }
  }
  out.annotations.reserve(s.annotations.size());
  const double W = static_cast<double>(w);
  for (const auto& ann : s.annotations) {
    AnnotationRecord m = ann;
    m.box = BBox{W - ann.box.x_max, ann.box.y_min, W - ann.box.x_min, ann.box.y_max};
    if (ann.tooth.has_value()) m.tooth = hflip_label(*ann.tooth);
    out.annotations.push_back(std::move(m));
  }
  return out;
}

Image photometric(const Image& img, const AugPolicy& policy, Rng& rng) {
  const double alpha = rng.uniform(policy.contrast_lo, policy.contrast_hi);
  const double beta = rng.uniform(-policy.brightness_delta, policy.brightness_delta);
  if (alpha == 1.0 && beta == 0.0) return img;
  Image out = img;
  for (float& v : out.px) {
    v = std::clamp(static_cast<float>(alpha * v + beta), 0.0f, 1.0f);
  }
  return out;
}

Sample affine(const Sample& s, const AugPolicy& policy, Rng& rng) {
  const double theta = rng.uniform(-policy.rotation_deg, policy.rotation_deg) *
                       M_PI / 180.0;
  const double scale = rng.uniform(policy.scale_lo, policy.scale_hi);
  const double tx = rng.uniform(-policy.translate_frac, policy.translate_frac) *
                    s.image.width;
  const double ty = rng.uniform(-policy.translate_frac, policy.translate_frac) *
                    s.image.height;

  const double c = scale * std::cos(theta);
  const double n = scale * std::sin(theta);
  const double cx = 0.5 * s.image.width;
  const double cy = 0.5 * s.image.height;
  // Rotation/scale about the image centre, then translation.
  const std::array<double, 6> M = {c,  -n, cx - c * cx + n * cy + tx,
                                   n,  c,  cy - n * cx - c * cy + ty};

  const bool identity = M[0] == 1.0 && M[1] == 0.0 && M[2] == 0.0 &&
                        M[3] == 0.0 && M[4] == 1.0 && M[5] == 0.0;
  if (identity) return s;

  Sample out;
  out.image = warp_affine(s.image, M, 0.0f);

  const double W = static_cast<double>(s.image.width);
  const double H = static_cast<double>(s.image.height);
  for (const auto& ann : s.annotations) {
    const double xs[4] = {ann.box.x_min, ann.box.x_max, ann.box.x_min, ann.box.x_max};
    const double ys[4] = {ann.box.y_min, ann.box.y_min, ann.box.y_max, ann.box.y_max};
    BBox hull{1e30, 1e30, -1e30, -1e30};
    for (int k = 0; k < 4; ++k) {
      const double x = M[0] * xs[k] + M[1] * ys[k] + M[2];
      const double y = M[3] * xs[k] + M[4] * ys[k] + M[5];
      hull.x_min = std::min(hull.x_min, x);
      hull.y_min = std::min(hull.y_min, y);
      hull.x_max = std::max(hull.x_max, x);
      hull.y_max = std::max(hull.y_max, y);
    }
    BBox clamped{std::max(0.0, hull.x_min), std::max(0.0, hull.y_min),
                 std::min(W, hull.x_max), std::min(H, hull.y_max)};
    if (!clamped.valid()) continue;
    if (clamped.area() < 0.25 * ann.box.area()) continue;
    AnnotationRecord m = ann;
    m.box = clamped;
    out.annotations.push_back(std::move(m));
  }
  return out;
}

Image cutout(const Image& img, const AugPolicy& policy, Rng& rng) {
  if (img.width <= 1 || img.height <= 1) {
    throw DomainError("cutout: image too small");
  }
  const int max_w = std::min(policy.cutout_max, img.width);
  const int max_h = std::min(policy.cutout_max, img.height);
  const int w = static_cast<int>(rng.uniform_int(1, max_w));
  const int h = static_cast<int>(rng.uniform_int(1, max_h));
  const int x0 = static_cast<int>(rng.uniform_int(0, img.width - w));
  const int y0 = static_cast<int>(rng.uniform_int(0, img.height - h));
  const float fill = img.mean();
  Image out = img;
  for (int y = y0; y < y0 + h; ++y) {
    for (int x = x0; x < x0 + w; ++x) {
      out.at(x, y) = fill;
    }
  }
  return out;
}

Sample augment(const Sample& s, const AugPolicy& policy, Rng& rng) {
  Sample out = s;
  if (rng.bernoulli(policy.p_hflip)) out = hflip(out);
  if (rng.bernoulli(policy.p_affine)) out = affine(out, policy, rng);
  if (rng.bernoulli(policy.p_photometric)) out.image = photometric(out.image, policy, rng);
  if (rng.bernoulli(policy.p_cutout)) out.image = cutout(out.image, policy, rng);
  return out;
}

}  // namespace panodent
