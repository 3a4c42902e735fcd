#include "panodent/corpus.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace panodent {

using json = nlohmann::ordered_json;

namespace {

const std::array<std::string, 3> kKindNames = {"enumeration", "diagnosis", "mask"};

json box_to_json(const BBox& b) {
  return json::array({b.x_min, b.y_min, b.x_max, b.y_max});
}

BBox box_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) {
    throw LoadError(where + ": bbox must be [x_min, y_min, x_max, y_max]");
  }
  BBox b{j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
         j[3].get<double>()};
  if (!b.valid()) {
    throw LoadError(where + ": degenerate bbox");
  }
  return b;
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw LoadError("cannot open file: " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw LoadError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_json_file(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

}  // namespace

const std::string& corpus_kind_name(CorpusKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

const ImageRecord* Dataset::find(const std::string& id) const {
  for (const auto& rec : images) {
    if (rec.id == id) return &rec;
  }
  return nullptr;
}

Dataset load_corpus(const std::filesystem::path& path, CorpusKind kind) {
  const json root = load_json_file(path);
  const auto dir = path.parent_path();

  if (!root.contains("images") || !root["images"].is_array()) {
    throw LoadError(path.string() + ": missing 'images' array");
  }
  Dataset ds;
  ds.kind = kind;

  std::set<std::string> seen_ids;
  for (const auto& jim : root["images"]) {
    ImageRecord rec;
    try {
      rec.id = jim.at("id").get<std::string>();
      rec.file = jim.at("file").get<std::string>();
      rec.width = jim.at("width").get<int>();
      rec.height = jim.at("height").get<int>();
    } catch (const json::exception& e) {
      throw LoadError(path.string() + ": malformed image record: " + e.what());
    }
    if (rec.width <= 0 || rec.height <= 0) {
      throw LoadError("image '" + rec.id + "': non-positive dimensions");
    }
    if (!seen_ids.insert(rec.id).second) {
      throw LoadError("duplicate image id '" + rec.id + "'");
    }
    rec.path = dir / rec.file;
    if (kind == CorpusKind::mask) {
      if (!jim.contains("mask")) {
        throw LoadError("image '" + rec.id + "': mask corpus record lacks 'mask'");
      }
      rec.mask_file = jim["mask"].get<std::string>();
      rec.mask_path = dir / rec.mask_file;
    }
    ds.images.push_back(std::move(rec));
  }

  if (root.contains("annotations")) {
    if (!root["annotations"].is_array()) {
      throw LoadError(path.string() + ": 'annotations' must be an array");
    }
    for (size_t i = 0; i < root["annotations"].size(); ++i) {
      const auto& ja = root["annotations"][i];
      const std::string where = "annotation #" + std::to_string(i);
      std::string image_id;
      try {
        image_id = ja.at("image_id").get<std::string>();
      } catch (const json::exception& e) {
        throw LoadError(where + ": missing image_id: " + e.what());
      }
      auto it = std::find_if(ds.images.begin(), ds.images.end(),
                             [&](const ImageRecord& r) { return r.id == image_id; });
      if (it == ds.images.end()) {
        throw LoadError(where + ": unknown image_id '" + image_id + "'");
      }
      AnnotationRecord ann;
      ann.box = box_from_json(ja.at("bbox"), where);
      if (ann.box.x_min < 0 || ann.box.y_min < 0 || ann.box.x_max > it->width ||
          ann.box.y_max > it->height) {
        throw LoadError(where + " (image '" + image_id + "'): box outside image extent");
      }
      if (ja.contains("fdi")) {
        ann.tooth = tooth_from_fdi(ja["fdi"].get<int>());
      }
      if (ja.contains("diagnoses")) {
        for (const auto& jd : ja["diagnoses"]) {
          try {
            ann.diagnoses.add(diagnosis_from_name(jd.get<std::string>()));
          } catch (const DomainError& e) {
            throw LoadError(where + " (image '" + image_id + "'): " + e.what());
          }
        }
      }
      // Kind invariants.
      if (kind == CorpusKind::enumeration) {
        if (!ann.tooth.has_value()) {
          throw LoadError(where + " (image '" + image_id +
                          "'): enumeration record lacks a tooth label");
        }
        if (!ann.diagnoses.empty()) {
          throw LoadError(where + " (image '" + image_id +
                          "'): enumeration record must not carry diagnoses");
        }
      } else if (kind == CorpusKind::diagnosis) {
        if (!ann.tooth.has_value()) {
          throw LoadError(where + " (image '" + image_id +
                          "'): diagnosis record lacks a tooth label");
        }
        if (ann.diagnoses.empty()) {
          throw LoadError(where + " (image '" + image_id +
                          "'): diagnosis record lacks disease labels");
        }
      }
      it->annotations.push_back(std::move(ann));
    }
  }
  return ds;
}

void save_corpus(const Dataset& ds, const std::filesystem::path& path) {
  json root;
  root["images"] = json::array();
  root["annotations"] = json::array();
  for (const auto& rec : ds.images) {
    json jim;
    jim["id"] = rec.id;
    jim["file"] = rec.file;
    if (ds.kind == CorpusKind::mask) jim["mask"] = rec.mask_file;
    jim["width"] = rec.width;
    jim["height"] = rec.height;
    root["images"].push_back(std::move(jim));
    for (const auto& ann : rec.annotations) {
      json ja;
      ja["image_id"] = rec.id;
      ja["bbox"] = box_to_json(ann.box);
      if (ann.tooth.has_value()) ja["fdi"] = ann.tooth->fdi_code();
      if (!ann.diagnoses.empty()) ja["diagnoses"] = ann.diagnoses.to_strings();
      root["annotations"].push_back(std::move(ja));
    }
  }
  write_json_file(root, path);
}

BBox crop_rect(const BBox& box, double pad_px, int image_width, int image_height) {
  if (!box.valid()) {
    throw DomainError("crop_rect: degenerate box");
  }
  BBox r{box.x_min - pad_px, box.y_min - pad_px, box.x_max + pad_px,
         box.y_max + pad_px};
  r.x_min = std::max(0.0, r.x_min);
  r.y_min = std::max(0.0, r.y_min);
  r.x_max = std::min(static_cast<double>(image_width), r.x_max);
  r.y_max = std::min(static_cast<double>(image_height), r.y_max);
  if (!r.valid()) {
    throw DomainError("crop_rect: box entirely outside image");
  }
  return r;
}

double default_pad_px(const BBox& box) {
  return 0.1 * std::hypot(box.width(), box.height());
}

Image crop_tooth(const Image& image, const BBox& box, double pad_px, int out_size) {
  const BBox r = crop_rect(box, pad_px, image.width, image.height);
  return resample_region(image, r.x_min, r.y_min, r.x_max, r.y_max, out_size,
                         out_size);
}

Image crop_tooth_nearest(const Image& image, const BBox& box, double pad_px,
                         int out_size) {
  const BBox r = crop_rect(box, pad_px, image.width, image.height);
  return resample_region_nearest(image, r.x_min, r.y_min, r.x_max, r.y_max,
                                 out_size, out_size);
}

void write_predictions(const std::vector<PipelineResult>& results,
                       const std::filesystem::path& path) {
  std::vector<const PipelineResult*> sorted;
  sorted.reserve(results.size());
  for (const auto& r : results) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const PipelineResult* a, const PipelineResult* b) {
              return a->image_id < b->image_id;
            });

  json root;
  root["results"] = json::array();
  for (const PipelineResult* r : sorted) {
    std::vector<ToothFinding> teeth = r->teeth;
    std::sort(teeth.begin(), teeth.end(),
              [](const ToothFinding& a, const ToothFinding& b) {
                if (a.confidence != b.confidence) return a.confidence > b.confidence;
                return a.tooth.fdi_code() < b.tooth.fdi_code();
              });
    json jr;
    jr["image_id"] = r->image_id;
    jr["teeth"] = json::array();
    for (const auto& t : teeth) {
      json jt;
      jt["bbox"] = box_to_json(t.box);
      jt["fdi"] = t.tooth.fdi_code();
      jt["confidence"] = t.confidence;
      jt["diagnosis_probs"] = t.diagnosis_probs;
      jt["diagnoses"] = t.diagnoses.to_strings();
      jr["teeth"].push_back(std::move(jt));
    }
    root["results"].push_back(std::move(jr));
  }
  write_json_file(root, path);
}

std::vector<PipelineResult> read_predictions(const std::filesystem::path& path) {
  const json root = load_json_file(path);
  if (!root.contains("results") || !root["results"].is_array()) {
    throw LoadError(path.string() + ": missing 'results' array");
  }
  std::vector<PipelineResult> out;
  for (const auto& jr : root["results"]) {
    PipelineResult r;
    try {
      r.image_id = jr.at("image_id").get<std::string>();
      for (const auto& jt : jr.at("teeth")) {
        ToothFinding t;
        t.box = box_from_json(jt.at("bbox"), "prediction for " + r.image_id);
        t.tooth = tooth_from_fdi(jt.at("fdi").get<int>());
        t.confidence = jt.at("confidence").get<double>();
        const auto& probs = jt.at("diagnosis_probs");
        if (!probs.is_array() || probs.size() != kNumDiagnoses) {
          throw LoadError("prediction for " + r.image_id +
                          ": diagnosis_probs must have 4 entries");
        }
        for (int i = 0; i < kNumDiagnoses; ++i) {
          t.diagnosis_probs[i] = probs[i].get<double>();
        }
        for (const auto& jd : jt.at("diagnoses")) {
          t.diagnoses.add(diagnosis_from_name(jd.get<std::string>()));
        }
        r.teeth.push_back(std::move(t));
      }
    } catch (const json::exception& e) {
      throw LoadError(path.string() + ": malformed prediction record: " + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace panodent
