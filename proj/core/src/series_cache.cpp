#include "regulus/series_cache.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "regulus/regular_partitions.hpp"

namespace regulus {

std::uint64_t content_hash(const ProductSpec& spec, Ring ring, Exponent precision) {
  const std::string text =
      spec.to_string() + "|" + ring.to_string() + "|" + std::to_string(precision);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SeriesCache::SeriesCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
  if (dir_) std::filesystem::create_directories(*dir_);
}

std::shared_ptr<const TruncSeries> SeriesCache::product(const ProductSpec& spec,
                                                        Exponent precision, Ring ring) {
  const std::string key =
      spec.to_string() + "|" + ring.to_string() + "|" + std::to_string(precision);
  {
    std::lock_guard lock(mu_);
    if (auto it = entries_.find(key); it != entries_.end()) {
      ++memory_hits_;
      return it->second;
    }
  }
  std::optional<std::filesystem::path> file;
  const std::string header = "regulus-series 1\n" + key + "\n";
  if (dir_) {
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0')
         << content_hash(spec, ring, precision) << ".series";
    file = *dir_ / name.str();
    if (auto loaded = load(*file, header, ring, precision)) {
      auto ptr = std::make_shared<const TruncSeries>(std::move(*loaded));
      std::lock_guard lock(mu_);
      ++disk_hits_;
      return entries_.emplace(key, ptr).first->second;
    }
  }
  auto ptr = std::make_shared<const TruncSeries>(expand_product(spec, precision, ring));
  if (file) store(*file, header, *ptr);
  std::lock_guard lock(mu_);
  ++misses_;
  return entries_.emplace(key, ptr).first->second;
}

std::shared_ptr<const TruncSeries> SeriesCache::b_ell(std::int64_t ell, Exponent precision,
                                                      Ring ring) {
  return product(b_ell_spec(ell), precision, ring);
}

std::optional<TruncSeries> SeriesCache::load(const std::filesystem::path& file,
                                             const std::string& header, Ring ring,
                                             Exponent precision) const {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string line1, line2;
  if (!std::getline(in, line1) || !std::getline(in, line2)) return std::nullopt;
  if (line1 + "\n" + line2 + "\n" != header) return std::nullopt;
  std::vector<mpz_class> coeffs;
  coeffs.reserve(static_cast<std::size_t>(precision));
  std::string tok;
  while (in >> tok) {
    mpz_class c;
    if (c.set_str(tok, 10) != 0) return std::nullopt;
    coeffs.push_back(std::move(c));
  }
  if (static_cast<Exponent>(coeffs.size()) != precision) return std::nullopt;
  return TruncSeries::from_coeffs(ring, coeffs, precision);
}

void SeriesCache::store(const std::filesystem::path& file, const std::string& header,
                        const TruncSeries& s) const {
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << header;
    for (const auto& c : s.coefficients()) out << c.get_str() << '\n';
    if (!out) return;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
}

std::size_t SeriesCache::memory_hits() const {
  std::lock_guard lock(mu_);
  return memory_hits_;
}

std::size_t SeriesCache::disk_hits() const {
  std::lock_guard lock(mu_);
  return disk_hits_;
}

std::size_t SeriesCache::misses() const {
  std::lock_guard lock(mu_);
  return misses_;
}

}  // namespace regulus
