#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "gl2wb/bpcore.hpp"

namespace gl2wb {

/// On-disk store of extracted R_r, one JSON file per (p, f, socle label).
/// An entry holds the field modulus, the construction seed, the generator
/// matrices, the torus characters, the socle and W row bases, a fingerprint
/// and the matrix of one seeded group element evaluated by the original
/// construction. Loading re-evaluates that element through Bruhat words and
/// compares; anything that does not verify is deleted and treated as a miss.
class FileCache : public RrStore {
 public:
  static constexpr int kFormatVersion = 1;

  struct Stats {
    int hits = 0, misses = 0, stores = 0, evictions = 0;
  };

  explicit FileCache(std::filesystem::path dir);

  std::optional<RrData> load(const Field& F, int r) override;
  void save(const Field& F, const RrData& d) override;

  std::filesystem::path entry_path(const Field& F, int r) const;
  const std::filesystem::path& dir() const { return dir_; }
  Stats stats() const;

 private:
  std::optional<RrData> read(const Field& F, int r, std::string& why) const;

  std::filesystem::path dir_;
  mutable std::mutex mu_;
  Stats stats_;
};

/// GL2WB_CACHE_DIR if set, else empty.
std::string cache_dir_from_env();

}  // namespace gl2wb
