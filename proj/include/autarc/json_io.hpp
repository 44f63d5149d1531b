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

#include <string>
#include <vector>

// The canonical nlohmann/json install path, or the bare single header
// when the library is vendored flat on the include path.
#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "autarc/count.hpp"
#include "autarc/fatpoint.hpp"
#include "autarc/presentation.hpp"
#include "autarc/zeta.hpp"

namespace autarc {

// All emitted JSON keeps insertion order so reports are byte-stable.
using Json = nlohmann::ordered_json;

// {construction, source, variables:[{name, role, ...}], equations:[...]}
// in canonical form: declared variable order, canonically printed
// polynomials.  Round-trips through presentation_from_json.
Json presentation_to_json(const SchemePresentation& pres);
SchemePresentation presentation_from_json(const Json& j);

// {origin, level, rank, generators:[...], basis:[...]}.
Json fatpoint_to_json(const FatPoint& point);

// {truncation, coefficients:[Laurent strings]}.
Json series_to_json(const MotivicSeries& series);
MotivicSeries series_from_json(const Json& j);

// {numerator:[Laurent strings], factors:[[a,b],...]} plus additive
// when present.
Json rational_form_to_json(const RationalForm& form);
RationalForm rational_form_from_json(const Json& j);

// {q, count} or {q, budget_exceeded: true}.
Json samples_to_json(const std::vector<CountSample>& samples);
std::vector<CountSample> samples_from_json(const Json& j);

Json interpolation_to_json(const InterpolationResult& result);
Json certify_to_json(const CertifyReport& report);

// Reads a whole file as UTF-8 text / parses a file as JSON; throws
// Error with the path on failure.
std::string read_text_file(const std::string& path);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace autarc
