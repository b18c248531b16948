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

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "meshanno/error.hpp"
#include "meshanno/mesh.hpp"

namespace meshanno {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::MalformedStatement,
              "line " + std::to_string(line_no) + ": " + what, "line=" + std::to_string(line_no));
}

double parse_double(std::string_view tok, std::size_t line_no) {
  double value = 0.0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    malformed(line_no, "invalid number '" + std::string(tok) + "'");
  }
  return value;
}

// Resolves a 1-based (or negative, relative) OBJ index into a 0-based one.
Index resolve_index(std::string_view tok, Index count, std::size_t line_no, const char* kind) {
  long long raw = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), raw);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || raw == 0) {
    malformed(line_no, std::string("invalid ") + kind + " index '" + std::string(tok) + "'");
  }
  const long long resolved = raw > 0 ? raw - 1 : count + raw;
  if (resolved < 0 || resolved >= count) {
    throw Error(ErrorCode::IndexOutOfRange,
                "line " + std::to_string(line_no) + ": " + kind + " index " + std::to_string(raw) +
                    " references a missing element",
                "line=" + std::to_string(line_no));
  }
  return static_cast<Index>(resolved);
}

std::string rest_of_line(std::string_view line, std::string_view keyword) {
  auto pos = line.find(keyword);
  std::string_view rest = line.substr(pos + keyword.size());
  while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
  while (!rest.empty() && is_space(rest.back())) rest.remove_suffix(1);
  return std::string(rest);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// First `map_Kd` of `material`, or of the first material when `material` is
// empty or not found.
std::optional<std::string> diffuse_texture(std::string_view mtl_text, const std::string& material) {
  std::optional<std::string> first_found;
  std::string current;
  std::size_t start = 0;
  while (start <= mtl_text.size()) {
    std::size_t end = mtl_text.find('\n', start);
    if (end == std::string_view::npos) end = mtl_text.size();
    std::string_view line = mtl_text.substr(start, end - start);
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "newmtl") {
      current = rest_of_line(line, "newmtl");
    } else if (tokens[0] == "map_Kd" && tokens.size() >= 2) {
      // Options such as -s/-o precede the file name; the name is last.
      std::string path(tokens.back());
      if (!material.empty() && current == material) return path;
      if (!first_found) first_found = path;
    }
  }
  return first_found;
}

}  // namespace

Mesh parse_obj(std::string_view text) {
  MeshBuilder builder;
  Index normal_count = 0;
  bool has_face = false;
  std::string library;
  std::string material;
  std::vector<Index> corners;
  std::vector<Index> uv_corners;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    const std::string_view kw = tokens[0];

    if (kw == "v") {
      if (tokens.size() < 4) malformed(line_no, "vertex needs 3 coordinates");
      builder.add_vertex({parse_double(tokens[1], line_no), parse_double(tokens[2], line_no),
                          parse_double(tokens[3], line_no)});
    } else if (kw == "vt") {
      if (tokens.size() < 2) malformed(line_no, "texture coordinate needs at least 1 value");
      const double u = parse_double(tokens[1], line_no);
      const double v = tokens.size() > 2 ? parse_double(tokens[2], line_no) : 0.0;
      builder.add_uv({u, v});
    } else if (kw == "vn") {
      if (tokens.size() < 4) malformed(line_no, "normal needs 3 components");
      for (int k = 1; k <= 3; ++k) parse_double(tokens[k], line_no);
      ++normal_count;
    } else if (kw == "f") {
      if (tokens.size() < 4) malformed(line_no, "face needs at least 3 vertices");
      corners.clear();
      uv_corners.clear();
      bool any_uv = false;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        std::string_view corner = tokens[k];
        std::string_view parts[3];
        int part_count = 0;
        std::size_t p = 0;
        while (true) {
          if (part_count == 3) malformed(line_no, "too many '/' in '" + std::string(corner) + "'");
          std::size_t slash = corner.find('/', p);
          parts[part_count++] = corner.substr(p, slash == std::string_view::npos ? slash : slash - p);
          if (slash == std::string_view::npos) break;
          p = slash + 1;
        }
        corners.push_back(resolve_index(parts[0], builder.vertex_count(), line_no, "vertex"));
        Index uv = -1;
        if (part_count >= 2 && !parts[1].empty()) {
          uv = resolve_index(parts[1], builder.uv_count(), line_no, "texture");
          any_uv = true;
        }
        uv_corners.push_back(uv);
        if (part_count == 3) {
          if (parts[2].empty()) malformed(line_no, "empty normal index");
          resolve_index(parts[2], normal_count, line_no, "normal");
        }
      }
      builder.add_face(corners, any_uv ? std::span<const Index>(uv_corners) : std::span<const Index>());
      has_face = true;
    } else if (kw == "mtllib") {
      if (library.empty()) library = rest_of_line(line, "mtllib");
    } else if (kw == "usemtl") {
      if (material.empty()) material = rest_of_line(line, "usemtl");
    }
    // o, g, s, l, p and anything else are ignored.
  }

  if (builder.vertex_count() == 0 || !has_face) {
    throw Error(ErrorCode::EmptyMesh, "OBJ contains no vertices or no faces");
  }
  builder.set_material(std::move(library), std::move(material));
  return std::move(builder).build();
}

Mesh load_obj_file(const std::string& path) {
  Mesh mesh = parse_obj(read_file(path));
  if (!mesh.material_library.empty()) {
    const std::filesystem::path mtl =
        std::filesystem::path(path).parent_path() / mesh.material_library;
    std::ifstream in(mtl, std::ios::binary);
    if (in) {
      std::ostringstream buf;
      buf << in.rdbuf();
      mesh.texture_path = diffuse_texture(buf.str(), mesh.material_name);
    }
  }
  return mesh;
}

}  // namespace meshanno
