#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "panodent/image.hpp"
#include "panodent/types.hpp"

namespace panodent {

enum class CorpusKind { enumeration, diagnosis, mask };

const std::string& corpus_kind_name(CorpusKind kind);

// One tooth annotation. Enumeration corpora carry a tooth label and no
// diagnoses; diagnosis corpora carry a tooth label and a non-empty set.
struct AnnotationRecord {
  BBox box;
  std::optional<ToothLabel> tooth;
  DiagnosisSet diagnoses;
};

struct ImageRecord {
  std::string id;
  std::string file;                 // as written in the corpus file
  std::filesystem::path path;       // resolved against the corpus location
  int width = 0;
  int height = 0;
  std::vector<AnnotationRecord> annotations;
  // kind == mask only: lesion mask aligned with the crop in `file`.
  std::string mask_file;
  std::filesystem::path mask_path;
};

struct Dataset {
  CorpusKind kind = CorpusKind::enumeration;
  std::vector<ImageRecord> images;

  const ImageRecord* find(const std::string& id) const;
};

// Parses and validates a corpus file. Throws LoadError naming the offending
// record on any inconsistency (missing file, malformed record, box outside
// the image, unknown diagnosis string, duplicate id, kind violation).
Dataset load_corpus(const std::filesystem::path& path, CorpusKind kind);

// Inverse of load_corpus for generator output and round-trip tests.
void save_corpus(const Dataset& ds, const std::filesystem::path& path);

// Box expanded by pad_px on each side and clamped to the image extent.
BBox crop_rect(const BBox& box, double pad_px, int image_width, int image_height);

// Default padding: 10% of the box diagonal.
double default_pad_px(const BBox& box);

// Padded, clamped, resampled to out_size x out_size, intensities in [0, 1].
Image crop_tooth(const Image& image, const BBox& box, double pad_px, int out_size);

// Same geometry with nearest-neighbour sampling, for mask alignment.
Image crop_tooth_nearest(const Image& image, const BBox& box, double pad_px,
                         int out_size);

// One abnormal tooth emitted by the pipeline.
struct ToothFinding {
  BBox box;
  ToothLabel tooth;
  double confidence = 0.0;
  std::array<double, kNumDiagnoses> diagnosis_probs = {0, 0, 0, 0};
  DiagnosisSet diagnoses;
};

struct PipelineResult {
  std::string image_id;
  std::vector<ToothFinding> teeth;
};

// Deterministic serialization: results sorted by image id, teeth by
// confidence descending. Two identical runs produce byte-identical files.
void write_predictions(const std::vector<PipelineResult>& results,
                       const std::filesystem::path& path);
std::vector<PipelineResult> read_predictions(const std::filesystem::path& path);

}  // namespace panodent
