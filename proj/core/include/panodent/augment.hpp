#pragma once

#include <vector>

#include "panodent/corpus.hpp"
#include "panodent/image.hpp"
#include "panodent/rng.hpp"
#include "panodent/types.hpp"

namespace panodent {

// On-the-fly augmentation policy. Each transform fires independently with its
// probability; application order is fixed: hflip, affine, photometric, cutout.
struct AugPolicy {
  double p_hflip = 0.5;
  double p_affine = 0.5;
  double p_photometric = 0.5;
  double p_cutout = 0.5;
  double brightness_delta = 0.1;
  double contrast_lo = 0.8;
  double contrast_hi = 1.2;
  double rotation_deg = 10.0;
  double scale_lo = 0.9;
  double scale_hi = 1.1;
  double translate_frac = 0.05;
  int cutout_max = 80;

  static AugPolicy disabled() {
    AugPolicy p;
    p.p_hflip = p.p_affine = p.p_photometric = p.p_cutout = 0.0;
    return p;
  }
};

struct Sample {
  Image image;
  std::vector<AnnotationRecord> annotations;
};

// Anatomical mirror: quadrant 1<->2, 3<->4, tooth index unchanged.
ToothLabel hflip_label(const ToothLabel& label);

// Mirrors pixels and boxes about the vertical axis and remaps quadrants.
Sample hflip(const Sample& s);

// out = clamp(alpha * image + beta), alpha ~ U[contrast_lo, contrast_hi],
// beta ~ U[-brightness_delta, +brightness_delta].
Image photometric(const Image& img, const AugPolicy& policy, Rng& rng);

// Random rotation/scale about the image centre plus translation, applied to
// pixels and box corners alike. Transformed boxes are re-tightened to their
// axis-aligned hull and clamped; boxes whose clamped area falls below 25% of
// the original box area are dropped together with their labels.
Sample affine(const Sample& s, const AugPolicy& policy, Rng& rng);

// One rectangle with sides uniform in [1, cutout_max] (clipped to the image),
// placed uniformly inside the image, filled with the image mean.
Image cutout(const Image& img, const AugPolicy& policy, Rng& rng);

// Composite with fixed order and independent per-transform gates.
Sample augment(const Sample& s, const AugPolicy& policy, Rng& rng);

}  // namespace panodent
