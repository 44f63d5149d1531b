/* Copyright 2026 The autarc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "autarc/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>
#include <vector>

#include "autarc/digest.hpp"
#include "autarc/errors.hpp"
#include "autarc/json_io.hpp"

namespace autarc {

namespace {

Json record_to_json(const CacheRecord& r) {
  Json j;
  j["digest"] = r.digest;
  j["q"] = r.q;
  j["budget_exceeded"] = r.budget_exceeded;
  if (!r.budget_exceeded) j["count"] = r.count.str();
  j["budget"] = r.budget;
  j["payload"] = r.payload;
  j["time"] = r.timestamp;
  return j;
}

CacheRecord record_from_json(const Json& j, const std::string& path,
                             std::size_t line_number) {
  CacheRecord r;
  try {
    r.digest = j.at("digest").get<std::string>();
    r.q = j.at("q").get<std::uint64_t>();
    r.budget_exceeded = j.at("budget_exceeded").get<bool>();
    if (!r.budget_exceeded) r.count = Int(j.at("count").get<std::string>());
    r.budget = j.at("budget").get<std::uint64_t>();
    r.payload = j.at("payload").get<std::string>();
    r.timestamp = j.value("time", std::string());
  } catch (const Json::exception& err) {
    throw Error("corrupt cache record at " + path + ":" +
                std::to_string(line_number) + ": " + err.what());
  }
  return r;
}

std::vector<CacheRecord> read_all(const std::string& path) {
  std::vector<CacheRecord> records;
  std::ifstream in(path, std::ios::binary);
  if (!in) return records;  // not created yet: empty cache
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw Error("corrupt cache line at " + path + ":" +
                  std::to_string(line_number));
    records.push_back(record_from_json(j, path, line_number));
  }
  return records;
}

// RAII advisory lock over the cache file.
class FileLock {
 public:
  FileLock(const std::string& path, int operation) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0)
      throw Error("cannot open cache file " + path + ": " +
                  std::strerror(errno));
    if (::flock(fd_, operation) != 0) {
      ::close(fd_);
      throw Error("cannot lock cache file " + path + ": " +
                  std::strerror(errno));
    }
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  int fd() const { return fd_; }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

CountCache::CountCache(std::string path) : path_(std::move(path)) {}

std::optional<CacheRecord> CountCache::lookup(const std::string& digest,
                                              std::uint64_t q,
                                              const std::string& payload,
                                              std::uint64_t budget) const {
  if (!enabled()) return std::nullopt;
  std::optional<CacheRecord> best;
  for (const CacheRecord& r : read_all(path_)) {
    if (r.digest != digest || r.q != q) continue;
    if (r.payload != payload)
      throw Error("cache digest collision for " + digest +
                  ": stored presentation differs; refusing to reuse");
    if (!r.budget_exceeded) {
      best = r;  // completed counts are always usable; newest wins
    } else if (r.budget >= budget && (!best || best->budget_exceeded)) {
      best = r;  // exceeded at a no-smaller budget implies exceeded now
    }
  }
  return best;
}

void CountCache::store(const CacheRecord& record) {
  if (!enabled()) return;
  FileLock lock(path_, LOCK_EX);
  // Re-read under the lock so concurrent writers stay consistent.
  for (const CacheRecord& r : read_all(path_)) {
    if (r.digest != record.digest || r.q != record.q) continue;
    if (r.payload != record.payload)
      throw Error("cache digest collision for " + record.digest +
                  ": stored presentation differs; refusing to append");
    if (!r.budget_exceeded && !record.budget_exceeded) {
      if (r.count != record.count)
        throw Error("cache integrity: key " + record.digest + "/q=" +
                    std::to_string(record.q) +
                    " already holds a different count");
      return;  // identical completed count: idempotent, nothing to do
    }
    if (r.budget_exceeded && record.budget_exceeded &&
        r.budget >= record.budget)
      return;  // an equal-or-stronger exceeded verdict is already stored
  }
  const std::string line = record_to_json(record).dump() + "\n";
  if (::lseek(lock.fd(), 0, SEEK_END) < 0)
    throw Error("cache seek failed: " + std::string(std::strerror(errno)));
  const char* data = line.data();
  std::size_t left = line.size();
  while (left > 0) {
    const ssize_t wrote = ::write(lock.fd(), data, left);
    if (wrote < 0) {
      if (errno == EINTR) continue;
      throw Error("cache write failed: " + std::string(std::strerror(errno)));
    }
    data += wrote;
    left -= static_cast<std::size_t>(wrote);
  }
  if (::fsync(lock.fd()) != 0)
    throw Error("cache fsync failed: " + std::string(std::strerror(errno)));
}

CountOutcome CountCache::counted(const SchemePresentation& pres,
                                 std::uint64_t q, const CountOptions& opts,
                                 bool* hit) {
  const std::string payload = canonical_payload(pres);
  const std::string digest = text_digest(payload);
  if (auto cached = lookup(digest, q, payload, opts.budget)) {
    if (hit) *hit = true;
    CountOutcome out;
    out.budget_exceeded = cached->budget_exceeded;
    out.count = cached->count;
    return out;
  }
  if (hit) *hit = false;
  const CountOutcome out = count_points(pres, q, opts);
  CacheRecord record;
  record.digest = digest;
  record.q = q;
  record.budget_exceeded = out.budget_exceeded;
  record.count = out.count;
  record.budget = opts.budget;
  record.payload = payload;
  record.timestamp = utc_timestamp();
  store(record);
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc;
  gmtime_r(&now, &tm_utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buffer;
}

}  // namespace autarc
