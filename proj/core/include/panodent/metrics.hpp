#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "panodent/corpus.hpp"
#include "panodent/types.hpp"

namespace panodent {

// Ground-truth box with a flat tooth class, as used by the evaluator.
struct GtBox {
  BBox box;
  int class_id = 0;
};

// Per-image greedy matching outcome.
struct MatchResult {
  struct Pair {
    int pred = 0;
    int gt = 0;
    double iou = 0.0;
  };
  std::vector<Pair> pairs;
  std::vector<int> unmatched_preds;
  std::vector<int> unmatched_gts;
};

// Greedy protocol: predictions visited by confidence descending, each matched
// to the still-unmatched same-class ground truth with the highest IoU >= thresh.
MatchResult match_detections(const std::vector<Detection>& preds,
                             const std::vector<GtBox>& gts, double iou_thresh);

struct ApResult {
  std::map<int, double> per_class;  // classes with at least one ground truth
  double mean = 0.0;
};

// COCO-style AP at one IoU threshold: per class, predictions ranked by
// confidence over the whole set, PR curve from greedy matches, 101-point
// interpolated area. Mean over classes with ground truth.
ApResult average_precision(const std::vector<std::vector<Detection>>& preds_per_image,
                           const std::vector<std::vector<GtBox>>& gts_per_image,
                           double iou_thresh);

struct EvalReport {
  double ap = 0.0;    // mean over IoU 0.50:0.05:0.95
  double ap50 = 0.0;
  double ap75 = 0.0;
  std::map<int, double> per_class_ap;  // averaged over the same thresholds
  std::optional<double> f1_filter;
  std::optional<double> f1_classification;
};

EvalReport ap_summary(const std::vector<std::vector<Detection>>& preds_per_image,
                      const std::vector<std::vector<GtBox>>& gts_per_image);

// 2TP / (2TP + FP + FN); 0 when the denominator is 0.
double f1_binary(const std::vector<bool>& pred, const std::vector<bool>& truth);

enum class F1Averaging { macro, micro };

// Macro: mean per-label F1 over the four diagnosis labels, labels with zero
// support excluded. Micro: F1 over pooled TP/FP/FN.
double f1_multilabel(const std::vector<DiagnosisSet>& pred,
                     const std::vector<DiagnosisSet>& truth, F1Averaging averaging);

// Full evaluation of a prediction file against ground-truth corpora.
// gt_diag drives the detection row and the multi-label classification row;
// gt_enum (when given) enables the healthy-filtering row: an enumeration
// tooth counts as abnormal iff the diagnosis corpus lists it, and as
// predicted-abnormal iff a predicted tooth shares its FDI with IoU >= 0.5.
EvalReport evaluate_predictions(const std::vector<PipelineResult>& preds,
                                const Dataset& gt_diag,
                                const Dataset* gt_enum = nullptr,
                                F1Averaging averaging = F1Averaging::macro);

// Plain-text table with columns Model | AP | AP75 | AP50 | F1.
std::string format_report_table(const EvalReport& report);

// JSON rendering of the report (stable field order).
std::string report_to_json(const EvalReport& report);

}  // namespace panodent
