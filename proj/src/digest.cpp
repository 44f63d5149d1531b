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
#include "autarc/digest.hpp"

#include <sstream>

namespace autarc {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : data) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  return hash;
}

std::string canonical_payload(const SchemePresentation& pres) {
  std::ostringstream out;
  out << "domain=";
  if (pres.equations.empty())
    out << "Q";
  else
    out << pres.equations.front().domain().describe();
  out << "\nvars=";
  const auto& names = *pres.variables;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out << ",";
    out << names[i];
  }
  out << "\nequations=";
  for (std::size_t i = 0; i < pres.equations.size(); ++i) {
    if (i) out << ";";
    out << pres.equations[i].to_string();
  }
  out << "\n";
  return out.str();
}

namespace {

std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

}  // namespace

std::string presentation_digest(const SchemePresentation& pres) {
  return to_hex(fnv1a64(canonical_payload(pres)));
}

std::string text_digest(std::string_view data) {
  return to_hex(fnv1a64(data));
}

}  // namespace autarc
