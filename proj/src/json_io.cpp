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
#include "autarc/json_io.hpp"

#include <fstream>
#include <sstream>

#include "autarc/errors.hpp"

namespace autarc {

Json presentation_to_json(const SchemePresentation& pres) {
  Json j;
  j["construction"] = pres.construction;
  j["source"] = pres.source;
  Json vars = Json::array();
  for (const VariableInfo& v : pres.info) {
    Json jv;
    jv["name"] = v.name;
    jv["role"] = v.role;
    jv["generator"] = v.generator;
    jv["basis_monomial"] = v.basis_monomial;
    jv["generator_index"] = v.generator_index;
    jv["basis_index"] = v.basis_index;
    vars.push_back(std::move(jv));
  }
  j["variables"] = std::move(vars);
  Json eqs = Json::array();
  for (const Polynomial& e : pres.equations) eqs.push_back(e.to_string());
  j["equations"] = std::move(eqs);
  return j;
}

SchemePresentation presentation_from_json(const Json& j) {
  SchemePresentation pres;
  try {
    pres.construction = j.at("construction").get<std::string>();
    pres.source = j.at("source").get<std::string>();
    std::vector<std::string> names;
    for (const Json& jv : j.at("variables")) {
      VariableInfo info;
      info.name = jv.at("name").get<std::string>();
      info.role = jv.at("role").get<std::string>();
      info.generator = jv.at("generator").get<std::string>();
      info.basis_monomial = jv.at("basis_monomial").get<std::string>();
      info.generator_index = jv.at("generator_index").get<int>();
      info.basis_index = jv.at("basis_index").get<int>();
      names.push_back(info.name);
      pres.info.push_back(std::move(info));
    }
    pres.variables = make_vars(names);
    for (const Json& je : j.at("equations"))
      pres.equations.push_back(parse_polynomial(
          je.get<std::string>(), Domain::rationals(), pres.variables));
  } catch (const Json::exception& err) {
    throw Error(std::string("malformed presentation JSON: ") + err.what());
  }
  return pres;
}

Json fatpoint_to_json(const FatPoint& point) {
  Json j;
  j["origin"] = point.origin;
  j["level"] = point.level;
  j["rank"] = point.rank();
  Json gens = Json::array();
  for (const Polynomial& g : point.algebra->groebner())
    gens.push_back(g.to_string());
  j["groebner"] = std::move(gens);
  Json basis = Json::array();
  const auto& names = *point.algebra->vars();
  for (const Monomial& m : point.algebra->basis())
    basis.push_back(m.to_string(names));
  j["basis"] = std::move(basis);
  return j;
}

Json series_to_json(const MotivicSeries& series) {
  Json j;
  j["truncation"] = series.truncation;
  Json coeffs = Json::array();
  for (const MotivicClass& c : series.coefficients)
    coeffs.push_back(c.to_string());
  j["coefficients"] = std::move(coeffs);
  return j;
}

MotivicSeries series_from_json(const Json& j) {
  MotivicSeries series;
  try {
    series.truncation = j.at("truncation").get<unsigned>();
    for (const Json& jc : j.at("coefficients"))
      series.coefficients.push_back(
          MotivicClass::parse(jc.get<std::string>()));
  } catch (const Json::exception& err) {
    throw Error(std::string("malformed series JSON: ") + err.what());
  }
  if (series.coefficients.size() != series.truncation + 1)
    throw Error("series JSON: coefficient count " +
                std::to_string(series.coefficients.size()) +
                " does not match truncation " +
                std::to_string(series.truncation));
  return series;
}

Json rational_form_to_json(const RationalForm& form) {
  Json j;
  Json num = Json::array();
  for (const MotivicClass& c : form.numerator) num.push_back(c.to_string());
  j["numerator"] = std::move(num);
  Json factors = Json::array();
  for (const DenominatorFactor& f : form.factors)
    factors.push_back(Json::array({f.a, f.b}));
  j["factors"] = std::move(factors);
  if (!form.additive.empty()) {
    Json add = Json::array();
    for (const MotivicClass& c : form.additive) add.push_back(c.to_string());
    j["additive"] = std::move(add);
  }
  return j;
}

RationalForm rational_form_from_json(const Json& j) {
  RationalForm form;
  try {
    for (const Json& jc : j.at("numerator"))
      form.numerator.push_back(MotivicClass::parse(jc.get<std::string>()));
    for (const Json& jf : j.at("factors")) {
      if (!jf.is_array() || jf.size() != 2)
        throw Error("rational form JSON: factor entries are [a, b] pairs");
      DenominatorFactor f;
      f.a = jf[0].get<int>();
      f.b = jf[1].get<unsigned>();
      if (f.b == 0) throw Error("rational form JSON: factor period must be >= 1");
      form.factors.push_back(f);
    }
    if (j.contains("additive"))
      for (const Json& jc : j.at("additive"))
        form.additive.push_back(MotivicClass::parse(jc.get<std::string>()));
  } catch (const Json::exception& err) {
    throw Error(std::string("malformed rational form JSON: ") + err.what());
  }
  form.sort_factors();
  return form;
}

Json samples_to_json(const std::vector<CountSample>& samples) {
  Json arr = Json::array();
  for (const CountSample& s : samples) {
    Json j;
    j["q"] = s.q;
    j["count"] = s.count.str();
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<CountSample> samples_from_json(const Json& j) {
  std::vector<CountSample> samples;
  try {
    for (const Json& js : j) {
      CountSample s;
      s.q = js.at("q").get<std::uint64_t>();
      s.count = Int(js.at("count").get<std::string>());
      samples.push_back(std::move(s));
    }
  } catch (const Json::exception& err) {
    throw Error(std::string("malformed samples JSON: ") + err.what());
  }
  return samples;
}

Json interpolation_to_json(const InterpolationResult& result) {
  Json j;
  j["ok"] = result.ok;
  if (!result.ok) j["failure"] = result.failure;
  if (result.ok) j["class"] = result.value.to_string();
  j["used"] = samples_to_json(result.used);
  j["holdout"] = samples_to_json(result.holdout);
  return j;
}

Json certify_to_json(const CertifyReport& report) {
  Json j;
  j["ok"] = report.ok;
  Json rows = Json::array();
  for (const CertifyRow& row : report.rows) {
    Json jr;
    jr["q"] = row.q;
    jr["budget_exceeded"] = row.budget_exceeded;
    jr["counted"] = row.counted.str();
    {
      std::ostringstream expected;
      expected << row.expected;
      jr["expected"] = expected.str();
    }
    jr["match"] = row.match;
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("invalid JSON in file: " + path);
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw Error("failed writing file: " + path);
}

}  // namespace autarc
