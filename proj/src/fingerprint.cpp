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

#include <bit>
#include <cstring>
#include <memory>

#include <openssl/evp.h>

#include "meshanno/error.hpp"
#include "meshanno/mesh.hpp"

namespace meshanno {
namespace {

// Accumulates the canonical little-endian encoding straight into a digest.
class CanonicalDigest {
 public:
  CanonicalDigest() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw Error(ErrorCode::Io, "sha256 unavailable");
    }
    buffer_.reserve(kChunk);
  }

  void put_u64(std::uint64_t v) {
    std::uint8_t bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<std::uint8_t>(v >> (8 * i));
    append(bytes, 8);
  }
  void put_i64(std::int64_t v) { put_u64(static_cast<std::uint64_t>(v)); }
  void put_f64(double v) { put_u64(std::bit_cast<std::uint64_t>(v)); }

  std::string hex() {
    flush();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx_.get(), digest, &len);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
      out.push_back(kHex[digest[i] >> 4]);
      out.push_back(kHex[digest[i] & 0xf]);
    }
    return out;
  }

 private:
  static constexpr std::size_t kChunk = 1 << 16;

  void append(const std::uint8_t* p, std::size_t n) {
    buffer_.insert(buffer_.end(), p, p + n);
    if (buffer_.size() >= kChunk) flush();
  }
  void flush() {
    if (!buffer_.empty()) EVP_DigestUpdate(ctx_.get(), buffer_.data(), buffer_.size());
    buffer_.clear();
  }

  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
  std::vector<std::uint8_t> buffer_;
};

}  // namespace

MeshFingerprint fingerprint(const Mesh& mesh) {
  CanonicalDigest digest;
  digest.put_u64(static_cast<std::uint64_t>(mesh.vertex_count()));
  digest.put_u64(static_cast<std::uint64_t>(mesh.triangle_count()));
  digest.put_u64(static_cast<std::uint64_t>(mesh.original_face_count()));
  for (Index i = 0; i < mesh.vertex_count(); ++i) {
    for (int k = 0; k < 3; ++k) digest.put_f64(mesh.vertices(i, k));
  }
  for (Index t = 0; t < mesh.triangle_count(); ++t) {
    for (int k = 0; k < 3; ++k) digest.put_i64(mesh.triangles(t, k));
  }
  for (Index t = 0; t < mesh.triangle_count(); ++t) digest.put_i64(mesh.source_face_of(t));
  return {digest.hex(), mesh.original_face_count()};
}

}  // namespace meshanno
