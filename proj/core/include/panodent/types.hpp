#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "panodent/errors.hpp"

namespace panodent {

inline constexpr int kNumToothClasses = 32;

// FDI two-digit tooth designation: quadrant 1..4, position-in-quadrant 1..8.
struct ToothLabel {
  int quadrant = 0;
  int index = 0;

  bool valid() const {
    return quadrant >= 1 && quadrant <= 4 && index >= 1 && index <= 8;
  }
  int fdi_code() const { return 10 * quadrant + index; }

  friend bool operator==(const ToothLabel&, const ToothLabel&) = default;
};

ToothLabel tooth_from_fdi(int fdi);

// Flat class id 8*(quadrant-1) + (index-1), in 0..31. Groups teeth by
// quadrant in FDI reading order.
int encode_class(const ToothLabel& label);
ToothLabel decode_class(int class_id);

// Axis-aligned box, continuous pixel coordinates, origin at the top-left.
struct BBox {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  bool valid() const { return x_min < x_max && y_min < y_max; }

  friend bool operator==(const BBox&, const BBox&) = default;
};

// Intersection over union of two valid boxes; 0 when disjoint.
double iou(const BBox& a, const BBox& b);

enum class Diagnosis : int {
  embedded = 0,
  periapical_lesion = 1,
  caries = 2,
  deep_caries = 3,
};

inline constexpr int kNumDiagnoses = 4;
inline constexpr std::array<Diagnosis, kNumDiagnoses> kAllDiagnoses = {
    Diagnosis::embedded, Diagnosis::periapical_lesion, Diagnosis::caries,
    Diagnosis::deep_caries};

const std::string& diagnosis_name(Diagnosis d);
Diagnosis diagnosis_from_name(const std::string& name);

// Subset of the four conditions, stored as a 4-bit vector aligned with the
// Diagnosis codes.
class DiagnosisSet {
 public:
  DiagnosisSet() = default;
  explicit DiagnosisSet(std::initializer_list<Diagnosis> ds) {
    for (Diagnosis d : ds) add(d);
  }
  static DiagnosisSet from_bits(uint8_t bits);

  void add(Diagnosis d) { bits_ |= mask(d); }
  void remove(Diagnosis d) { bits_ &= static_cast<uint8_t>(~mask(d)); }
  bool contains(Diagnosis d) const { return (bits_ & mask(d)) != 0; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  uint8_t bits() const { return bits_; }

  std::vector<Diagnosis> to_vector() const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const DiagnosisSet&, const DiagnosisSet&) = default;

 private:
  static uint8_t mask(Diagnosis d) {
    return static_cast<uint8_t>(1u << static_cast<int>(d));
  }
  uint8_t bits_ = 0;
};

// Stage-1 output: a box, a flat tooth class and a confidence score.
struct Detection {
  BBox box;
  int class_id = 0;
  double confidence = 0.0;

  ToothLabel tooth() const { return decode_class(class_id); }
};

}  // namespace panodent
