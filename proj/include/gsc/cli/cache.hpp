#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gsc::cli {

/// One persisted value. `value` is the decimal string exactly as written;
/// `digits` is the number of correct decimals it carries.
struct CacheRecord {
  std::string kind;  // stieltjes | log_gamma | euler_gamma
  unsigned k = 0;
  std::size_t a = 0;
  std::size_t q = 0;
  unsigned digits = 0;
  std::string value;
  std::string method;
  std::string created_at;

  bool same_key(const CacheRecord& o) const {
    return kind == o.kind && k == o.k && a == o.a && q == o.q;
  }
};

std::string to_json_line(const CacheRecord& r);
/// Throws std::runtime_error on a malformed line.
CacheRecord from_json_line(const std::string& line);

/// JSON-lines file of CacheRecords. Reads take a shared advisory lock,
/// appends an exclusive one. Lines that do not parse are skipped.
class ValueCache {
 public:
  explicit ValueCache(std::string path) : path_(std::move(path)) {}

  const std::string& path() const { return path_; }

  /// Record with the same key and at least `min_digits`, preferring the
  /// highest digits.
  std::optional<CacheRecord> lookup(const CacheRecord& key, unsigned min_digits) const;
  void store(const CacheRecord& record) const;
  std::vector<CacheRecord> load() const;

 private:
  std::string path_;
};

}  // namespace gsc::cli
