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

#include "simdiff/error.hpp"

namespace simdiff {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kOrderOutOfRange: return "OrderOutOfRange";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kDomain: return "Domain";
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kDictionaryTooSmall: return "DictionaryTooSmall";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kMissingOrder: return "MissingOrder";
    case ErrorCode::kEmptyReport: return "EmptyReport";
    case ErrorCode::kMarkerNotFound: return "MarkerNotFound";
    case ErrorCode::kNetwork: return "Network";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kCacheWrite: return "CacheWrite";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

}  // namespace simdiff
