//
// Project polymm - Copyright 2026 polymm contributors
// SPDX-License-Identifier: Apache-2.0
//

#include "polymm/util/sha1.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace polymm {

namespace {

std::string to_hex(std::span<const unsigned char> digest) {
  static const char* hexdig = "0123456789abcdef";
  std::string out;
  out.reserve(digest.size() * 2);
  for (unsigned char c : digest) {
    out.push_back(hexdig[c >> 4]);
    out.push_back(hexdig[c & 0xf]);
  }
  return out;
}

std::array<unsigned char, 20> sha1_digest(const void* data, std::size_t len) {
  std::array<unsigned char, 20> digest{};
  unsigned int dlen = 0;
  if (EVP_Digest(data, len, digest.data(), &dlen, EVP_sha1(), nullptr) != 1 || dlen != 20) {
    throw std::runtime_error("sha1: digest computation failed");
  }
  return digest;
}

}  // namespace

std::string sha1_hex(std::span<const std::byte> data) {
  const auto digest = sha1_digest(data.data(), data.size());
  return to_hex(digest);
}

std::string sha1_hex(std::string_view text) {
  const auto digest = sha1_digest(text.data(), text.size());
  return to_hex(digest);
}

std::string sha1_hex_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("sha1: cannot open " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr);
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, 20> digest{};
  unsigned int dlen = 0;
  EVP_DigestFinal_ex(ctx, digest.data(), &dlen);
  EVP_MD_CTX_free(ctx);
  return to_hex(digest);
}

std::uint64_t sha1_seed(std::string_view text) {
  const auto digest = sha1_digest(text.data(), text.size());
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | digest[static_cast<std::size_t>(i)];
  return seed;
}

}  // namespace polymm
