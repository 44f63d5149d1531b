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
#include <string>
#include <string_view>

#include "autarc/presentation.hpp"

namespace autarc {

// 64-bit FNV-1a over the bytes.
std::uint64_t fnv1a64(std::string_view data);

// Canonical text a presentation hashes to: domain, variable names in
// declared order, and the canonically printed equations.  Two
// presentations share a payload exactly when counting them is the same
// computation.
std::string canonical_payload(const SchemePresentation& pres);

// Hex digest of the canonical payload; cache key material.
std::string presentation_digest(const SchemePresentation& pres);

// Hex digest of an arbitrary string (scenario digests).
std::string text_digest(std::string_view data);

}  // namespace autarc
