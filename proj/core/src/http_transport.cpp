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

#include "httplib.h"
#include "simdiff/error.hpp"
#include "simdiff/ingest.hpp"
#include "simdiff/report.hpp"

namespace simdiff {

HttpResponse HttpTransport::get(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw Error(ErrorCode::kInvalidArgument, "not a URL: " + url);
  const auto path_begin = url.find('/', scheme_end + 3);
  const std::string origin = path_begin == std::string::npos ? url : url.substr(0, path_begin);
  const std::string path = path_begin == std::string::npos ? "/" : url.substr(path_begin);

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(60);
  const httplib::Headers headers = {
      {"User-Agent", "simdiff/" + std::string(tool_version()) + " (text similarity tool)"}};
  const auto result = client.Get(path, headers);
  if (!result) {
    throw Error(ErrorCode::kNetwork, "GET " + url + " failed: " + httplib::to_string(result.error()));
  }
  return {result->status, result->body};
}

}  // namespace simdiff
