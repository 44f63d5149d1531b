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
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "autarc/count.hpp"
#include "autarc/presentation.hpp"

namespace autarc {

// One cached counting result.  Completed counts are exact and
// budget-independent; exceeded verdicts are only reusable at budgets
// no larger than the one that failed.
struct CacheRecord {
  std::string digest;       // presentation content digest
  std::uint64_t q = 0;
  bool budget_exceeded = false;
  Int count = 0;            // valid when !budget_exceeded
  std::uint64_t budget = 0; // budget in force when the record was made
  std::string payload;      // full canonical payload, collision check
  std::string timestamp;    // informational, never compared
};

// Append-only JSONL store of counting results, keyed by
// (presentation digest, q).  A key is never rewritten with a different
// completed count; appends take an advisory file lock and fsync.
class CountCache {
 public:
  // An empty path disables the cache (all lookups miss, stores no-op).
  explicit CountCache(std::string path);

  bool enabled() const { return !path_.empty(); }
  const std::string& path() const { return path_; }

  // Newest usable record for the key: a completed count, or an
  // exceeded verdict whose budget was at least `budget`.  Throws Error
  // when the digest matches but the stored payload differs (collision)
  // or the file is corrupt.
  std::optional<CacheRecord> lookup(const std::string& digest, std::uint64_t q,
                                    const std::string& payload,
                                    std::uint64_t budget) const;

  // Appends the record unless an equivalent one exists.  Throws Error
  // if a completed count for the key exists with a different value.
  void store(const CacheRecord& record);

  // count_points through the cache.  `hit` (optional) reports whether
  // the result came from the store.
  CountOutcome counted(const SchemePresentation& pres, std::uint64_t q,
                       const CountOptions& opts, bool* hit = nullptr);

 private:
  std::string path_;
};

// Current UTC time as an ISO-8601 string.
std::string utc_timestamp();

}  // namespace autarc
