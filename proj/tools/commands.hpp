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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "simdiff/error.hpp"
#include "simdiff/freq_dict.hpp"
#include "simdiff/ingest.hpp"
#include "simdiff/weighting.hpp"

namespace simdiff::cli {

enum class Stage { kFetch, kPipeline, kDictionary, kAnalysis, kRender, kWrite, kCorpus };

std::string_view stage_name(Stage stage);

// Exit status for a failure of `code` during `stage`. See README for the table.
int exit_code(Stage stage, ErrorCode code);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  SourceSpec source1;
  SourceSpec source2;
  std::filesystem::path dict_path;
  WeightScheme scheme;
  Composition composition = Composition::kIndependenceProduct;
  double epsilon_floor = kDefaultEpsilonFloor;
  std::vector<int> orders = {1, 2, 3};
  std::size_t top_k = 50;
  std::uint64_t seed = 42;
  double canvas_width = 800;
  double canvas_height = 600;
  std::optional<std::filesystem::path> json_path;
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> svg_path;
  std::optional<std::filesystem::path> gazetteer_path;
  std::optional<std::filesystem::path> lemma_exceptions_path;
  FetchOptions fetch;
};

// Output path for order n: "{n}" in the name is replaced by the order;
// otherwise, when several orders are written, ".n<order>" is inserted
// before the extension.
std::filesystem::path order_path(const std::filesystem::path& path, int n, bool several);

// fetch -> pipeline -> n-grams per order -> scoring -> report sinks.
// Nothing is written unless every stage succeeds.
int cmd_compare(const RunConfig& config, Transport& transport, std::ostream& err);

int cmd_dict_build(const std::filesystem::path& corpus_dir, const std::filesystem::path& out_path,
                   const std::optional<std::filesystem::path>& lemma_exceptions, std::ostream& err);

int cmd_fetch(const SourceSpec& spec, const std::filesystem::path& out_path,
              const FetchOptions& options, Transport& transport, std::ostream& err);

// Parses argv and dispatches to a command.
int run(int argc, const char* const* argv, Transport& transport, std::ostream& out,
        std::ostream& err);

}  // namespace simdiff::cli
