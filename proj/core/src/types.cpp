#include "panodent/types.hpp"

#include <algorithm>

namespace panodent {

ToothLabel tooth_from_fdi(int fdi) {
  ToothLabel label{fdi / 10, fdi % 10};
  if (!label.valid()) {
    throw DomainError("invalid FDI code: " + std::to_string(fdi));
  }
  return label;
}

int encode_class(const ToothLabel& label) {
  if (!label.valid()) {
    throw DomainError("invalid tooth label: quadrant=" +
                      std::to_string(label.quadrant) +
                      " index=" + std::to_string(label.index));
  }
  return 8 * (label.quadrant - 1) + (label.index - 1);
}

ToothLabel decode_class(int class_id) {
  if (class_id < 0 || class_id >= kNumToothClasses) {
    throw DomainError("tooth class id out of range: " + std::to_string(class_id));
  }
  return ToothLabel{class_id / 8 + 1, class_id % 8 + 1};
}

double iou(const BBox& a, const BBox& b) {
  if (!a.valid() || !b.valid()) {
    throw DomainError("iou: degenerate box");
  }
  const double ix = std::max(0.0, std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min));
  const double iy = std::max(0.0, std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min));
  const double inter = ix * iy;
  if (inter <= 0.0) return 0.0;
  return inter / (a.area() + b.area() - inter);
}

namespace {
const std::array<std::string, kNumDiagnoses> kDiagnosisNames = {
    "embedded", "periapical_lesion", "caries", "deep_caries"};
}

const std::string& diagnosis_name(Diagnosis d) {
  return kDiagnosisNames[static_cast<int>(d)];
}

Diagnosis diagnosis_from_name(const std::string& name) {
  for (int i = 0; i < kNumDiagnoses; ++i) {
    if (kDiagnosisNames[i] == name) return static_cast<Diagnosis>(i);
  }
  throw DomainError("unknown diagnosis: '" + name + "'");
}

DiagnosisSet DiagnosisSet::from_bits(uint8_t bits) {
  if (bits > 0x0f) {
    throw DomainError("diagnosis bit vector out of range: " + std::to_string(bits));
  }
  DiagnosisSet s;
  s.bits_ = bits;
  return s;
}

int DiagnosisSet::size() const {
  int n = 0;
  for (Diagnosis d : kAllDiagnoses) n += contains(d) ? 1 : 0;
  return n;
}

std::vector<Diagnosis> DiagnosisSet::to_vector() const {
  std::vector<Diagnosis> out;
  for (Diagnosis d : kAllDiagnoses) {
    if (contains(d)) out.push_back(d);
  }
  return out;
}

std::vector<std::string> DiagnosisSet::to_strings() const {
  std::vector<std::string> out;
  for (Diagnosis d : to_vector()) out.push_back(diagnosis_name(d));
  return out;
}

}  // namespace panodent
