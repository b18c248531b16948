// Copyright 2026 The meshanno Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "meshanno/annotation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>

#include "json.hpp"
#include "meshanno/error.hpp"

namespace meshanno {
namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
    i += len;
  }
  return true;
}

// Counter of an "a-N" id, or 0 when the id has another shape.
Index id_counter(std::string_view id) {
  if (id.size() < 3 || id.substr(0, 2) != "a-") return 0;
  Index value = 0;
  auto [ptr, ec] = std::from_chars(id.data() + 2, id.data() + id.size(), value);
  if (ec != std::errc() || ptr != id.data() + id.size()) return 0;
  return value;
}

bool is_lower_hex64(const std::string& s) {
  return s.size() == 64 &&
         std::all_of(s.begin(), s.end(), [](char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); });
}

class Checker {
 public:
  explicit Checker(std::vector<Finding>& out) : out_(out) {}

  void add(std::string code, std::string path, std::string message, std::string record = {}) {
    out_.push_back({std::move(code), std::move(path), std::move(message), std::move(record)});
  }

  void exact_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& path,
                  const std::string& record = {}) {
    for (const char* key : keys) {
      if (!obj.contains(key)) add("schema_violation", path + "/" + key, "missing key '" + std::string(key) + "'", record);
    }
    for (const auto& [key, value] : obj.items()) {
      if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return key == k; }) == keys.end()) {
        add("schema_violation", path + "/" + key, "unknown key '" + key + "'", record);
      }
    }
  }

 private:
  std::vector<Finding>& out_;
};

}  // namespace

std::string format_annotation_id(Index counter) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "a-%04d", counter);
  return buf;
}

void check_color(const Rgb& color) {
  for (int c : {color.r, color.g, color.b}) {
    if (c < 0 || c > 255) throw Error(ErrorCode::InvalidColor, "color channels must lie in [0, 255]");
  }
}

void check_text(std::string_view text) {
  if (!valid_utf8(text)) throw Error(ErrorCode::InvalidText, "annotation text is not valid UTF-8");
}

const AnnotationRecord* AnnotationDocument::find(std::string_view id) const {
  auto it = std::find_if(records_.begin(), records_.end(), [&](const auto& r) { return r.id == id; });
  return it == records_.end() ? nullptr : &*it;
}

AnnotationRecord* AnnotationDocument::find_mutable(std::string_view id) {
  return const_cast<AnnotationRecord*>(std::as_const(*this).find(id));
}

void AnnotationDocument::check_faces(const std::vector<Index>& faces, ErrorCode code) const {
  if (faces.empty()) throw Error(code, "face list is empty");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i] < 0 || faces[i] >= mesh_.face_count) {
      throw Error(code, "face index " + std::to_string(faces[i]) + " out of range [0, " +
                            std::to_string(mesh_.face_count) + ")");
    }
    if (i > 0 && faces[i] <= faces[i - 1]) throw Error(code, "face list must be ascending and unique");
  }
}

std::string AnnotationDocument::create(const SelectionSet& selection, std::string text, Rgb color) {
  if (selection.faces.empty()) throw Error(ErrorCode::EmptySelection, "selection is empty");
  if (selection.mesh_sha256 != mesh_.sha256) {
    throw Error(ErrorCode::MeshMismatch, "selection was made on a different mesh");
  }
  check_text(text);
  check_color(color);
  std::vector<Index> faces = selection.faces;
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  check_faces(faces, ErrorCode::InvalidFaces);

  AnnotationRecord record{format_annotation_id(next_counter_), color, std::move(text), std::move(faces)};
  ++next_counter_;
  records_.push_back(std::move(record));
  return records_.back().id;
}

void AnnotationDocument::update(std::string_view id, std::optional<std::string> text,
                                std::optional<Rgb> color, std::optional<std::vector<Index>> faces) {
  AnnotationRecord* record = find_mutable(id);
  if (!record) throw Error(ErrorCode::UnknownId, "no annotation with id '" + std::string(id) + "'");
  if (text) check_text(*text);
  if (color) check_color(*color);
  if (faces) check_faces(*faces, ErrorCode::InvalidFaces);
  if (text) record->text = std::move(*text);
  if (color) record->color = *color;
  if (faces) record->faces = std::move(*faces);
}

void AnnotationDocument::remove(std::string_view id) {
  auto it = std::find_if(records_.begin(), records_.end(), [&](const auto& r) { return r.id == id; });
  if (it == records_.end()) throw Error(ErrorCode::UnknownId, "no annotation with id '" + std::string(id) + "'");
  records_.erase(it);
}

AnnotationDocument AnnotationDocument::from_records(MeshFingerprint mesh,
                                                    std::vector<AnnotationRecord> records) {
  AnnotationDocument doc(std::move(mesh));
  std::set<std::string, std::less<>> ids;
  for (const auto& r : records) {
    if (r.id.empty() || !ids.insert(r.id).second) {
      throw Error(ErrorCode::SchemaViolation, "duplicate or empty annotation id '" + r.id + "'");
    }
    check_text(r.text);
    check_color(r.color);
    doc.check_faces(r.faces, ErrorCode::SchemaViolation);
    doc.next_counter_ = std::max(doc.next_counter_, id_counter(r.id) + 1);
  }
  doc.records_ = std::move(records);
  return doc;
}

std::string save_document(const AnnotationDocument& doc) {
  ordered_json root;
  root["format"] = kDocumentFormat;
  root["version"] = kDocumentVersion;
  root["mesh"] = ordered_json::object();
  root["mesh"]["sha256"] = doc.mesh().sha256;
  root["mesh"]["face_count"] = doc.mesh().face_count;
  root["annotations"] = ordered_json::array();
  for (const auto& r : doc.annotations()) {
    ordered_json rec;
    rec["id"] = r.id;
    rec["color"] = ordered_json::array({r.color.r, r.color.g, r.color.b});
    rec["text"] = r.text;
    rec["faces"] = r.faces;
    root["annotations"].push_back(std::move(rec));
  }
  return root.dump(2) + "\n";
}

std::vector<Finding> validate_document(std::string_view text, const MeshFingerprint* mesh) {
  std::vector<Finding> findings;
  Checker check(findings);

  json root = json::parse(text, nullptr, false);
  if (root.is_discarded()) {
    check.add("schema_violation", "", "document is not valid JSON");
    return findings;
  }
  if (!root.is_object()) {
    check.add("schema_violation", "", "document root must be an object");
    return findings;
  }
  check.exact_keys(root, {"format", "version", "mesh", "annotations"}, "");

  if (root.contains("format") && root["format"] != kDocumentFormat) {
    check.add("schema_violation", "/format", "format must be \"" + std::string(kDocumentFormat) + "\"");
  }
  if (root.contains("version")) {
    const auto& v = root["version"];
    if (!v.is_number_integer()) {
      check.add("schema_violation", "/version", "version must be an integer");
    } else if (v.get<long long>() != kDocumentVersion) {
      check.add("version_unsupported", "/version", "unsupported version " + v.dump());
    }
  }

  long long face_count = -1;
  if (root.contains("mesh")) {
    const auto& m = root["mesh"];
    if (!m.is_object()) {
      check.add("schema_violation", "/mesh", "mesh must be an object");
    } else {
      check.exact_keys(m, {"sha256", "face_count"}, "/mesh");
      if (m.contains("sha256") && !(m["sha256"].is_string() && is_lower_hex64(m["sha256"].get<std::string>()))) {
        check.add("schema_violation", "/mesh/sha256", "sha256 must be 64 lowercase hex digits");
      }
      if (m.contains("face_count")) {
        if (m["face_count"].is_number_unsigned()) {
          face_count = m["face_count"].get<long long>();
        } else {
          check.add("schema_violation", "/mesh/face_count", "face_count must be a non-negative integer");
        }
      }
      if (mesh && m.contains("sha256") && m["sha256"].is_string() &&
          m["sha256"].get<std::string>() != mesh->sha256) {
        check.add("fingerprint_mismatch", "/mesh/sha256", "mesh fingerprint mismatch");
      }
      if (mesh && face_count >= 0 && face_count != mesh->face_count) {
        check.add("fingerprint_mismatch", "/mesh/face_count",
                  "face_count " + std::to_string(face_count) + " does not match mesh (" +
                      std::to_string(mesh->face_count) + ")");
      }
    }
  }
  const long long range = mesh ? mesh->face_count : face_count;

  if (root.contains("annotations")) {
    const auto& list = root["annotations"];
    if (!list.is_array()) {
      check.add("schema_violation", "/annotations", "annotations must be an array");
      return findings;
    }
    std::set<std::string> ids;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "/annotations/" + std::to_string(i);
      const auto& rec = list[i];
      if (!rec.is_object()) {
        check.add("schema_violation", path, "annotation must be an object");
        continue;
      }
      std::string id;
      if (rec.contains("id") && rec["id"].is_string() && !rec["id"].get<std::string>().empty()) {
        id = rec["id"].get<std::string>();
        if (!ids.insert(id).second) check.add("schema_violation", path + "/id", "duplicate id '" + id + "'", id);
      } else if (rec.contains("id")) {
        check.add("schema_violation", path + "/id", "id must be a non-empty string");
      }
      check.exact_keys(rec, {"id", "color", "text", "faces"}, path, id);
      if (rec.contains("color")) {
        const auto& c = rec["color"];
        const bool ok = c.is_array() && c.size() == 3 &&
                        std::all_of(c.begin(), c.end(), [](const json& x) {
                          return x.is_number_integer() && x.get<long long>() >= 0 && x.get<long long>() <= 255;
                        });
        if (!ok) check.add("schema_violation", path + "/color", "color must be [r, g, b] with channels in [0, 255]", id);
      }
      if (rec.contains("text") && !rec["text"].is_string()) {
        check.add("schema_violation", path + "/text", "text must be a string", id);
      }
      if (rec.contains("faces")) {
        const auto& faces = rec["faces"];
        if (!faces.is_array() || faces.empty()) {
          check.add("schema_violation", path + "/faces", "faces must be a non-empty array", id);
          continue;
        }
        long long prev = -1;
        for (std::size_t k = 0; k < faces.size(); ++k) {
          const std::string fpath = path + "/faces/" + std::to_string(k);
          if (!faces[k].is_number_integer()) {
            check.add("schema_violation", fpath, "face index must be an integer", id);
            continue;
          }
          const long long f = faces[k].get<long long>();
          if (f < 0 || (range >= 0 && f >= range)) {
            check.add("schema_violation", fpath,
                      "record '" + id + "' face index " + std::to_string(f) + " out of range [0, " +
                          std::to_string(range) + ")",
                      id);
          }
          if (f <= prev) check.add("schema_violation", fpath, "faces must be ascending and unique", id);
          prev = f;
        }
      }
    }
  }
  return findings;
}

AnnotationDocument load_document(std::string_view text, const LoadOptions& options) {
  const std::vector<Finding> findings = validate_document(text);
  for (const auto& f : findings) {
    const ErrorCode code = f.code == "version_unsupported" ? ErrorCode::VersionUnsupported
                                                           : ErrorCode::SchemaViolation;
    throw Error(code, (f.path.empty() ? "" : f.path + ": ") + f.message, f.path);
  }

  const json root = json::parse(text);
  MeshFingerprint mesh{root["mesh"]["sha256"].get<std::string>(), root["mesh"]["face_count"].get<Index>()};
  std::vector<AnnotationRecord> records;
  for (const auto& rec : root["annotations"]) {
    const auto& c = rec["color"];
    records.push_back({rec["id"].get<std::string>(),
                       {c[0].get<int>(), c[1].get<int>(), c[2].get<int>()},
                       rec["text"].get<std::string>(),
                       rec["faces"].get<std::vector<Index>>()});
  }

  if (options.expected_mesh && !(*options.expected_mesh == mesh)) {
    const std::string msg = "mesh fingerprint mismatch: document " + mesh.sha256.substr(0, 12) +
                            "... vs mesh " + options.expected_mesh->sha256.substr(0, 12) + "...";
    if (!options.allow_mesh_mismatch) throw Error(ErrorCode::FingerprintMismatch, msg);
    if (options.warnings) options.warnings->push_back(msg);
    // Rebind to the supplied mesh; faces must still be in its range.
    mesh = *options.expected_mesh;
  }
  return AnnotationDocument::from_records(std::move(mesh), std::move(records));
}

}  // namespace meshanno
