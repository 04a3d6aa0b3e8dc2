#include "paucity/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <array>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "paucity/error.hpp"
#include "paucity/report.hpp"

namespace paucity {

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xF]);
  }
  return out;
}

RunKey RunKey::make(const IntPolynomial& poly, int s, std::int64_t B, const std::string& mode) {
  RunKey key;
  key.canonical = std::string(kSchema) + "|poly=" + format_coefficients(poly) + "|s=" + std::to_string(s) +
                  "|B=" + std::to_string(B) + "|mode=" + mode;
  key.digest = sha256_hex(key.canonical);
  return key;
}

ResultCache::ResultCache(std::filesystem::path root, Warn warn) : root_(std::move(root)), warn_(std::move(warn)) {}

std::filesystem::path ResultCache::path_for(const RunKey& key) const {
  return root_ / key.digest.substr(0, 2) / (key.digest + ".json");
}

std::optional<CountSummary> ResultCache::load(const RunKey& key) const {
  const auto path = path_for(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    std::ifstream in(path);
    Json j = Json::parse(in);
    if (j.at("key").get<std::string>() != key.canonical) {
      throw Error(ErrorKind::ParseError, "entry belongs to a different key");
    }
    return counts_from_json(j.at("summary"));
  } catch (const std::exception& e) {
    if (warn_) warn_("ignoring corrupt cache entry " + path.string() + ": " + e.what());
    return std::nullopt;
  }
}

void ResultCache::store(const RunKey& key, const CountSummary& summary) const {
  static std::atomic<unsigned long> counter{0};
  const auto path = path_for(key);
  std::filesystem::create_directories(path.parent_path());
  Json j;
  j["schema"] = kSchema;
  j["key"] = key.canonical;
  j["summary"] = counts_json(summary);
  std::ostringstream tmp_name;
  tmp_name << path.string() << ".tmp." << ::getpid() << "." << counter++;
  const std::filesystem::path tmp = tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << dump(j);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace paucity
