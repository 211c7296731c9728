#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "regulus/product_spec.hpp"
#include "regulus/series.hpp"

namespace regulus {

// FNV-1a over the canonical product text, ring and precision.
std::uint64_t content_hash(const ProductSpec& spec, Ring ring, Exponent precision);

/// Memoizes expanded products keyed by (product, ring, precision).  Safe to
/// share between threads.  With a directory, entries also persist as text
/// files named by content hash and written atomically.
class SeriesCache {
 public:
  explicit SeriesCache(std::optional<std::filesystem::path> dir = std::nullopt);

  std::shared_ptr<const TruncSeries> product(const ProductSpec& spec, Exponent precision,
                                             Ring ring);
  std::shared_ptr<const TruncSeries> b_ell(std::int64_t ell, Exponent precision, Ring ring);

  std::size_t memory_hits() const;
  std::size_t disk_hits() const;
  std::size_t misses() const;

 private:
  std::optional<TruncSeries> load(const std::filesystem::path& file, const std::string& header,
                                  Ring ring, Exponent precision) const;
  void store(const std::filesystem::path& file, const std::string& header,
             const TruncSeries& s) const;

  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<const TruncSeries>> entries_;
  std::size_t memory_hits_ = 0;
  std::size_t disk_hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace regulus
