#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "paucity/enumerate.hpp"

namespace paucity {

/// Content address of one enumeration run. Every input that affects counts is part of
/// the canonical text; the digest is its SHA-256.
struct RunKey {
  std::string canonical;
  std::string digest;

  static RunKey make(const IntPolynomial& poly, int s, std::int64_t B, const std::string& mode = "box");

  bool operator==(const RunKey&) const = default;
};

std::string sha256_hex(const std::string& data);

/// One JSON file per RunKey under `root`. Writes go through a temporary file and an atomic
/// rename, so concurrent writers sharing a directory never expose partial entries. Entries
/// that fail to parse or do not match their key are reported through `warn` and ignored.
class ResultCache {
 public:
  using Warn = std::function<void(const std::string&)>;

  explicit ResultCache(std::filesystem::path root, Warn warn = {});

  std::optional<CountSummary> load(const RunKey& key) const;
  void store(const RunKey& key, const CountSummary& summary) const;

  std::filesystem::path path_for(const RunKey& key) const;
  const std::filesystem::path& root() const { return root_; }

 private:
  std::filesystem::path root_;
  Warn warn_;
};

}  // namespace paucity
