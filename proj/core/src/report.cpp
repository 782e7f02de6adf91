/*
 * Copyright 2026 The simdiff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "simdiff/report.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>

#include "json.hpp"
#include "simdiff/error.hpp"

#ifndef SIMDIFF_VERSION
#define SIMDIFF_VERSION "0.0.0"
#endif

namespace simdiff {
namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return ec == std::errc() ? std::string(buf.data(), ptr) : std::string("nan");
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

Json gram_to_json(const WeightedNGram& w) {
  Json j;
  j["ngram"] = w.gram.lemmas;
  j["f1"] = w.f1;
  j["f2"] = w.f2;
  j["fe"] = w.fe;
  j["entity"] = w.is_entity;
  j["noun_chunk"] = w.is_noun_chunk;
  j["weight"] = w.weight;
  return j;
}

}  // namespace

std::string_view tool_version() { return SIMDIFF_VERSION; }

std::string current_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    long long value = 0;
    const std::string_view text(epoch);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size()) now = static_cast<std::time_t>(value);
  }
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::array<char, 32> buf{};
  const std::size_t n = std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return std::string(buf.data(), n);
}

std::string to_json(const AnalysisReport& report) {
  Json root;
  root["doc1_id"] = report.doc1_id;
  root["doc2_id"] = report.doc2_id;

  Json scheme;
  scheme["kind"] = scheme_name(report.scheme.kind);
  scheme["normalization_factor"] = report.scheme.normalization_factor;
  scheme["presence_value"] = report.scheme.presence_value;
  scheme["log_base"] = "e";
  root["scheme"] = scheme;

  const ReportMetadata& m = report.metadata;
  Json meta;
  meta["dictionary_path"] = m.dictionary_path;
  meta["dictionary_sha256"] = m.dictionary_sha256;
  meta["dictionary_level"] = m.dictionary_level;
  meta["composition"] = m.composition;
  meta["epsilon_floor"] = m.epsilon_floor;
  meta["normalization_factor"] = m.normalization_factor;
  meta["presence_value"] = m.presence_value;
  meta["clamp_rule"] = m.clamp_rule;
  meta["frequency_units"] = m.frequency_units;
  meta["tool_version"] = m.tool_version;
  meta["timestamp"] = m.timestamp;
  root["metadata"] = meta;

  Json per_n = Json::object();
  for (const auto& [n, grams] : report.per_n) {
    Json list = Json::array();
    for (const auto& w : grams) list.push_back(gram_to_json(w));
    per_n[std::to_string(n)] = std::move(list);
  }
  root["per_n"] = std::move(per_n);
  return root.dump(2) + "\n";
}

AnalysisReport from_json(std::string_view json) {
  try {
    const Json root = Json::parse(json);
    AnalysisReport report;
    report.doc1_id = root.at("doc1_id").get<std::string>();
    report.doc2_id = root.at("doc2_id").get<std::string>();

    const Json& scheme = root.at("scheme");
    report.scheme.kind = parse_scheme(scheme.at("kind").get<std::string>());
    report.scheme.normalization_factor = scheme.at("normalization_factor").get<double>();
    report.scheme.presence_value = scheme.at("presence_value").get<double>();

    const Json& meta = root.at("metadata");
    ReportMetadata& m = report.metadata;
    m.dictionary_path = meta.at("dictionary_path").get<std::string>();
    m.dictionary_sha256 = meta.at("dictionary_sha256").get<std::string>();
    m.dictionary_level = meta.at("dictionary_level").get<std::string>();
    m.composition = meta.at("composition").get<std::string>();
    m.epsilon_floor = meta.at("epsilon_floor").get<double>();
    m.normalization_factor = meta.at("normalization_factor").get<double>();
    m.presence_value = meta.at("presence_value").get<double>();
    m.clamp_rule = meta.at("clamp_rule").get<std::string>();
    m.frequency_units = meta.at("frequency_units").get<std::string>();
    m.tool_version = meta.at("tool_version").get<std::string>();
    m.timestamp = meta.at("timestamp").get<std::string>();

    for (const auto& [key, list] : root.at("per_n").items()) {
      const int n = std::stoi(key);
      auto& grams = report.per_n[n];
      for (const Json& item : list) {
        WeightedNGram w;
        w.gram.lemmas = item.at("ngram").get<std::vector<std::string>>();
        w.f1 = item.at("f1").get<double>();
        w.f2 = item.at("f2").get<double>();
        w.fe = item.at("fe").get<double>();
        w.is_entity = item.at("entity").get<bool>();
        w.is_noun_chunk = item.at("noun_chunk").get<bool>();
        w.weight = item.at("weight").get<double>();
        grams.push_back(std::move(w));
      }
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid report JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParse, "invalid report JSON: non-numeric order key");
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::kParse, "invalid report JSON: order key out of range");
  }
}

std::string to_csv(const AnalysisReport& report, int n) {
  const auto it = report.per_n.find(n);
  if (it == report.per_n.end()) {
    throw Error(ErrorCode::kMissingOrder, "report has no " + std::to_string(n) + "-gram list");
  }
  std::string out = "ngram,f1,f2,fe,entity,noun_chunk,weight\r\n";
  for (const WeightedNGram& w : it->second) {
    out += csv_field(w.gram.joined());
    out += ',' + format_double(w.f1);
    out += ',' + format_double(w.f2);
    out += ',' + format_double(w.fe);
    out += w.is_entity ? ",true" : ",false";
    out += w.is_noun_chunk ? ",true" : ",false";
    out += ',' + format_double(w.weight);
    out += "\r\n";
  }
  return out;
}

}  // namespace simdiff
