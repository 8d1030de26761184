#include "gsc/cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gsc::cli {

namespace {

using json = nlohmann::ordered_json;

// Owns a descriptor holding an flock for its lifetime.
class LockedFile {
 public:
  LockedFile(const std::string& path, int flags, int lock) {
    fd_ = ::open(path.c_str(), flags, 0644);
    if (fd_ < 0) {
      if (errno == ENOENT && !(flags & O_CREAT)) return;
      throw std::runtime_error("cannot open cache " + path + ": " + std::strerror(errno));
    }
    if (::flock(fd_, lock) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock cache " + path + ": " + std::strerror(errno));
    }
  }
  ~LockedFile() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  LockedFile(const LockedFile&) = delete;
  LockedFile& operator=(const LockedFile&) = delete;

  int fd() const { return fd_; }

 private:
  int fd_ = -1;
};

}  // namespace

std::string to_json_line(const CacheRecord& r) {
  json j;
  j["kind"] = r.kind;
  j["k"] = r.k;
  j["a"] = r.a;
  j["q"] = r.q;
  j["digits"] = r.digits;
  j["value"] = r.value;
  j["method"] = r.method;
  j["created_at"] = r.created_at;
  return j.dump();
}

CacheRecord from_json_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed cache line: ") + e.what());
  }
  CacheRecord r;
  try {
    r.kind = j.at("kind").get<std::string>();
    r.k = j.value("k", 0u);
    r.a = j.value("a", std::size_t{0});
    r.q = j.value("q", std::size_t{0});
    r.digits = j.at("digits").get<unsigned>();
    r.value = j.at("value").get<std::string>();
    r.method = j.value("method", std::string());
    r.created_at = j.value("created_at", std::string());
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed cache record: ") + e.what());
  }
  return r;
}

std::vector<CacheRecord> ValueCache::load() const {
  LockedFile file(path_, O_RDONLY, LOCK_SH);
  std::vector<CacheRecord> out;
  if (file.fd() < 0) return out;
  std::string text;
  char buf[65536];
  ssize_t n;
  while ((n = ::read(file.fd(), buf, sizeof buf)) > 0) text.append(buf, static_cast<std::size_t>(n));
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(from_json_line(line));
    } catch (const std::runtime_error&) {
      // A torn or foreign line must not make the whole cache unusable.
    }
  }
  return out;
}

std::optional<CacheRecord> ValueCache::lookup(const CacheRecord& key, unsigned min_digits) const {
  std::optional<CacheRecord> best;
  for (auto& r : load()) {
    if (!r.same_key(key) || r.digits < min_digits) continue;
    if (!best || r.digits > best->digits) best = std::move(r);
  }
  return best;
}

void ValueCache::store(const CacheRecord& record) const {
  LockedFile file(path_, O_WRONLY | O_CREAT | O_APPEND, LOCK_EX);
  std::string line = to_json_line(record) + "\n";
  const char* p = line.data();
  std::size_t left = line.size();
  while (left > 0) {
    ssize_t n = ::write(file.fd(), p, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw std::runtime_error("cannot write cache " + path_ + ": " + std::strerror(errno));
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
}

}  // namespace gsc::cli
